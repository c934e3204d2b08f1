#include "vulnfactory/abundance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vulnfactory/errors.hpp"

namespace vulnfactory {
namespace {

void require_fraction(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        std::ostringstream msg;
        msg << what << " must be in [0, 1], got " << v;
        throw DomainError(msg.str());
    }
}

}  // namespace

double AbundanceTable::fraction(int cwe_id) const {
    auto it = entries.find(cwe_id);
    return it == entries.end() ? 0.0 : it->second;
}

AbundanceTable compute_abundance(const std::map<int, std::uint64_t>& counts,
                                 std::string snapshot_label) {
    // Sum in long double: 1000 classes of up to 2^53 each stay exact enough
    // for a correctly rounded quotient.
    long double total = 0.0L;
    for (const auto& [cwe, count] : counts) {
        total += static_cast<long double>(count);
    }
    if (total <= 0.0L) {
        throw DomainError("abundance needs at least one positive count");
    }

    AbundanceTable table;
    table.snapshot_label = std::move(snapshot_label);
    for (const auto& [cwe, count] : counts) {
        table.entries.emplace(cwe, static_cast<double>(static_cast<long double>(count) / total));
    }
    return table;
}

std::vector<std::string> DeploymentProfile::validate() const {
    long double total = 0.0L;
    for (const auto& [id, share] : shares) {
        if (!(share >= 0.0 && share <= 1.0)) {
            std::ostringstream msg;
            msg << "deployment share of '" << id << "' must be in [0, 1], got " << share;
            throw DomainError(msg.str());
        }
        total += share;
    }
    std::vector<std::string> warnings;
    if (total > 1.0L + kShareTolerance) {
        std::ostringstream msg;
        msg << "deployment shares sum to " << static_cast<double>(total)
            << " (> 1); stacks are treated as overlapping";
        warnings.push_back(msg.str());
    }
    return warnings;
}

double exposure(const ExposureInputs& in) {
    require_fraction(in.abundance, "abundance A(t_v)");
    require_fraction(in.deployment, "deployment share D(s)");
    require_fraction(in.p_exploit, "exploit probability");
    return in.abundance * in.deployment * in.p_exploit;
}

CoverageResult min_exploits_for_coverage(const DeploymentProfile& profile, double target) {
    require_fraction(target, "coverage target");
    (void)profile.validate();

    std::vector<std::pair<std::string, double>> order(profile.shares.begin(), profile.shares.end());
    // std::map iteration is already id-ascending; stable_sort keeps that for ties.
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });

    CoverageResult result;
    double covered = 0.0;
    if (covered >= target - kShareTolerance) {
        result.reachable = true;
        return result;
    }
    for (const auto& [id, share] : order) {
        covered += share;
        result.selected.push_back(id);
        if (covered >= target - kShareTolerance) {
            result.reachable = true;
            result.count = result.selected.size();
            return result;
        }
    }
    result.selected.clear();
    return result;
}

double kev_ratio(std::uint64_t exploited_count, std::uint64_t published_count) {
    if (published_count == 0) {
        throw DomainError("published CVE count must be positive");
    }
    if (exploited_count > published_count) {
        throw DomainError("exploited count exceeds published count");
    }
    return static_cast<double>(exploited_count) / static_cast<double>(published_count);
}

}  // namespace vulnfactory
