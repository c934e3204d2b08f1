#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vulnfactory {

/// Normalised share of each CWE class in one corpus snapshot. The label
/// names the corpus and the time, e.g. "nvd@2025-12-31".
struct AbundanceTable {
    std::map<int, double> entries;
    std::string snapshot_label;

    [[nodiscard]] double fraction(int cwe_id) const;
};

/// entries[t] = counts[t] / sum(counts). Zero-count classes are kept with
/// fraction 0. Throws DomainError when every count is zero.
[[nodiscard]] AbundanceTable compute_abundance(const std::map<int, std::uint64_t>& counts,
                                               std::string snapshot_label = {});

inline constexpr double kShareTolerance = 1e-12;

/// Deployment share D(s) per software id.
struct DeploymentProfile {
    std::map<std::string, double> shares;

    /// Throws DomainError for a share outside [0, 1] or NaN. Returns warnings
    /// (e.g. shares summing above 1, which overlapping stacks can produce).
    std::vector<std::string> validate() const;
};

struct ExposureInputs {
    double abundance = 0.0;  // A(t_v)
    double deployment = 0.0; // D(s)
    double p_exploit = 0.0;  // P_exploit(v)
};

/// E(v, s) = A(t_v) * D(s) * P_exploit(v). Throws DomainError if any factor
/// is outside [0, 1].
[[nodiscard]] double exposure(const ExposureInputs& in);

struct CoverageResult {
    bool reachable = false;
    std::size_t count = 0;               // meaningful only when reachable
    std::vector<std::string> selected;   // ids in selection order
};

/// Fewest software ids whose shares reach `target`, largest share first
/// (ties by id). A sum within kShareTolerance below target counts as
/// reaching it. Unreachable when the total is short of target.
/// Throws DomainError for target outside [0, 1] or invalid shares.
[[nodiscard]] CoverageResult min_exploits_for_coverage(const DeploymentProfile& profile,
                                                       double target);

/// exploited / published. Throws DomainError when published == 0 or
/// exploited > published.
[[nodiscard]] double kev_ratio(std::uint64_t exploited_count, std::uint64_t published_count);

}  // namespace vulnfactory
