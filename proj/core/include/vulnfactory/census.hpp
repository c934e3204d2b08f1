#pragma once

#include <bitset>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "vulnfactory/bigint.hpp"
#include "vulnfactory/factory.hpp"

namespace vulnfactory {

struct CensusReport {
    BigInt k;                    // executions so far
    BigInt base_count = 11;
    BigInt per_module = 5;
    BigInt generated;            // per_module * k
    BigInt total;                // base_count + generated
};

/// |V_k| = 11 + 5k. Throws DomainError for negative k.
[[nodiscard]] BigInt total_after(const BigInt& k);

[[nodiscard]] CensusReport census_after(const BigInt& k);

/// Smallest k with 11 + 5k > C; 0 when the base set alone exceeds C.
[[nodiscard]] BigInt min_iterations_exceeding(const BigInt& bound);

/// The parameter component p of a vulnerability, site-qualified: a generated
/// entry is identified by its template slot plus the module's ParamSet, a
/// base entry by its base index.
struct GeneratedParams {
    int slot = 0;
    ParamSet params;
    friend bool operator==(const GeneratedParams&, const GeneratedParams&) = default;
};
using ParameterKey = std::variant<int, GeneratedParams>;

[[nodiscard]] ParameterKey parameter_key(const Vulnerability& v);

/// Distinct iff components differ or parameter sets differ.
[[nodiscard]] bool is_distinct(const Vulnerability& a, const Vulnerability& b);

struct AssignabilityVerdict {
    bool recognized_cwe = false;        // (i) class in the 11-entry catalog
    bool identifiable_component = false;  // (ii) non-empty, well-formed name
    bool independently_fixable = false;   // (iii) lives in a file owned by its component alone

    [[nodiscard]] bool assignable() const noexcept {
        return recognized_cwe && identifiable_component && independently_fixable;
    }
};

/// Criterion (i) is reduced to catalog membership; (iii) to file-level
/// ownership: the vulnerability's file must be the one its component owns
/// (vuln_module_<n>.c for module n, base_set/cwe_<id>.c for base entries),
/// and that mapping is injective across components.
[[nodiscard]] AssignabilityVerdict is_cve_assignable(const Vulnerability& v);

/// f(n, i) = v_{n,i}. Throws DomainError unless n >= 0 and i in 1..5.
[[nodiscard]] VulnId enumerate(const BigInt& n, int i);

/// Inverse of enumerate on generated ids. Throws DomainError on base ids.
[[nodiscard]] std::pair<BigInt, int> enumerate_inverse(const VulnId& id);

/// Columns I ⊆ {1..5} invalidated wholesale plus a count s of individually
/// removed vulnerabilities.
class InvalidationSet {
public:
    InvalidationSet() = default;
    /// Throws DomainError for columns outside 1..5 or negative s.
    InvalidationSet(std::initializer_list<int> columns, BigInt finite_instances = 0);

    void invalidate_column(int column);
    void set_finite_instances(BigInt s);

    [[nodiscard]] bool column_invalidated(int column) const;
    [[nodiscard]] std::size_t column_count() const noexcept { return columns_.count(); }
    [[nodiscard]] const BigInt& finite_instances() const noexcept { return finite_instances_; }

private:
    std::bitset<5> columns_;
    BigInt finite_instances_ = 0;
};

/// max(0, (5 - |I|)k + 11 - s).
[[nodiscard]] BigInt surviving_growth(const InvalidationSet& inv, const BigInt& k);

/// True iff |I| < 5; s never changes the answer.
[[nodiscard]] bool is_unbounded(const InvalidationSet& inv);

/// Smallest k with surviving_growth(inv, k) > C, or nullopt when |I| = 5.
[[nodiscard]] std::optional<BigInt> min_iterations_surviving_exceeding(const InvalidationSet& inv,
                                                                     const BigInt& bound);

}  // namespace vulnfactory
