#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vulnfactory/bigint.hpp"

namespace vulnfactory {

// Binary tapes are written most significant bit first. The canonical form
// has no leading zeros except the single tape "0".

/// Throws EncodingError on any symbol other than '0'/'1' or an empty tape.
[[nodiscard]] BigInt decode_tape(std::string_view tape);
[[nodiscard]] std::string encode_tape(const BigInt& value);
[[nodiscard]] bool is_canonical_tape(std::string_view tape) noexcept;

/// Canonical encoding of decode(tape) + 1. Leading zeros on input are
/// accepted and dropped. Throws EncodingError on non-binary symbols.
[[nodiscard]] std::string binary_increment(std::string_view tape);

struct TmState {
    std::string counter_tape = "0";
    BigInt invocation_count = 0;

    friend bool operator==(const TmState&, const TmState&) = default;
};

/// S_n: a textual machine description wrapping module n's template text.
struct Emission {
    BigInt n;
    std::string description;
};

[[nodiscard]] std::string machine_description(const BigInt& n);

struct Invocation {
    Emission emission;
    TmState state;
    std::size_t steps = 0;  // machine steps until the accept state
    bool halted = false;
};

/// One Read -> Generate -> Increment -> Halt cycle, simulated step by step
/// over explicit tapes. Throws EncodingError if the counter tape is not
/// binary.
[[nodiscard]] Invocation tm_invoke(const TmState& state);

/// Yield-level view of F1 || F2 || ...
struct Composition {
    std::vector<BigInt> yields;
};

/// Sum of the per-invocation yields. Throws DomainError when empty or when
/// a yield is not positive.
[[nodiscard]] BigInt compose(const Composition& c);

/// 2^num_cwes: the size of the powerset of a CWE list.
/// Throws DomainError for num_cwes == 0.
[[nodiscard]] BigInt fermi_factory_count(unsigned long num_cwes);

struct EmissionSummary {
    BigInt n;
    std::string description_hash;  // lowercase hex SHA-256
    std::size_t description_len = 0;
};

[[nodiscard]] EmissionSummary summarize(const Emission& e);

/// Lowercase hex SHA-256 of `data`.
[[nodiscard]] std::string sha256_hex(std::string_view data);

}  // namespace vulnfactory
