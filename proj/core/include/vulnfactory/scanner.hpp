#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vulnfactory/bigint.hpp"
#include "vulnfactory/factory.hpp"

namespace vulnfactory {

struct ScanFinding {
    CweClass cwe;
    /// n recovered from the parameterised literal at the site; empty when the
    /// literal cannot correspond to any non-negative n (e.g. buffer size < 16).
    std::optional<BigInt> recovered_n;
    /// n taken from the enclosing function's canonical name vuln_<cwe>_<n>;
    /// empty when the name is not canonical or names a different CWE.
    std::optional<BigInt> name_n;
    std::size_t line = 0;  // 1-based line of the sink
    std::string function;
    std::string evidence;  // the matched sink line, trimmed
};

struct ScanReport {
    BigInt manifest_n;
    /// n from the string returned by the manifest function, when present.
    std::optional<BigInt> manifest_function_n;
    std::vector<ScanFinding> findings;
    bool consistent = false;
};

/// Pattern-based detector for the factory's emission grammar.
///
/// Line 1 must be the manifest header; otherwise FormatError. Each function
/// body is matched against five sink rules:
///   CWE-121  `char b[S];` then `strcpy(b, ...)`          n = S - 16
///   CWE-134  `printf(x)` with a non-literal format, and
///            a `"module N"` context literal               n = N
///   CWE-190  `int t = INT_MAX - N;` then `t + ...`        n = N
///   CWE-416  `p = malloc(S);` `free(p);` then a use of p  n = S - 8
///   CWE-78   `snprintf(cmd, ..., "... module N %s", ...)` then `system(cmd)`
///                                                         n = N
/// The report is consistent iff each of the five CWEs is found exactly once,
/// every recovered n and every function-name n equals the header's n, and the
/// manifest function returns the same n.
[[nodiscard]] ScanReport scan_module(std::string_view source);

/// scan_module(render_module(n).source).consistent
[[nodiscard]] bool verify_roundtrip(const BigInt& n);

}  // namespace vulnfactory
