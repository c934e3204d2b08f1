#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vulnfactory/abundance.hpp"
#include "vulnfactory/census.hpp"
#include "vulnfactory/model_checker.hpp"
#include "vulnfactory/scanner.hpp"
#include "vulnfactory/tm_model.hpp"

// JSON wire formats. Integers that fit in 64 bits are JSON numbers; larger
// ones are emitted as decimal strings so no reader silently rounds them.

namespace vulnfactory::json {

/// {"k": int, "base": 11, "generated": int, "total": int}
[[nodiscard]] std::string census(const CensusReport& r);

/// {"bound": C, "violated": true, "trace_length": L, "final_state": {"k": .., "count": ..}}
[[nodiscard]] std::string verdict(const Verdict& v);

/// {"manifest_n": int, "findings": [{"cwe": int, "n": int, "line": int}], "consistent": bool}
/// A finding whose n could not be recovered carries "n": null.
[[nodiscard]] std::string scan_report(const ScanReport& r);

/// {"n": int, "description_hash": hex, "description_len": int}
[[nodiscard]] std::string emission(const EmissionSummary& e);

/// {"label": text, "entries": {"<cwe>": fraction, ...}}
[[nodiscard]] std::string abundance(const AbundanceTable& t);

struct CountsDocument {
    std::map<int, std::uint64_t> counts;
    std::string label;
};

/// Parses {"counts": {"121": 70, ...}, "label": "corpus@date"}; label optional.
/// Throws InputError on malformed documents.
[[nodiscard]] CountsDocument parse_counts(std::string_view text);

/// Parses {"shares": {"name": 0.5, ...}}. Throws InputError.
[[nodiscard]] DeploymentProfile parse_shares(std::string_view text);

/// {"error": code, "message": text}
[[nodiscard]] std::string error(std::string_view code, std::string_view message);

}  // namespace vulnfactory::json
