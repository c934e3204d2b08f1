#include "vulnfactory/census.hpp"

#include <algorithm>
#include <string_view>

#include "vulnfactory/errors.hpp"

namespace vulnfactory {
namespace {

constexpr int kBase = 11;
constexpr int kPerModule = 5;

void require_non_negative(const BigInt& v, const char* what) {
    if (v < 0) {
        throw DomainError(std::string(what) + " must be non-negative");
    }
}

// "vuln_module_<n>" with n in canonical decimal, or "base".
std::optional<BigInt> module_of_component(std::string_view name) {
    constexpr std::string_view prefix = "vuln_module_";
    if (!name.starts_with(prefix)) {
        return std::nullopt;
    }
    std::string_view digits = name.substr(prefix.size());
    if (!is_decimal(digits) || (digits.size() > 1 && digits.front() == '0')) {
        return std::nullopt;
    }
    return parse_decimal(digits);
}

// Floor division for a non-negative numerator and positive denominator.
BigInt floor_div(const BigInt& num, const BigInt& den) { return num / den; }

}  // namespace

BigInt total_after(const BigInt& k) {
    require_non_negative(k, "iteration count k");
    return kBase + kPerModule * k;
}

CensusReport census_after(const BigInt& k) {
    require_non_negative(k, "iteration count k");
    CensusReport r;
    r.k = k;
    r.generated = kPerModule * k;
    r.total = r.base_count + r.generated;
    return r;
}

BigInt min_iterations_exceeding(const BigInt& bound) {
    require_non_negative(bound, "bound C");
    if (bound < kBase) {
        return 0;
    }
    return floor_div(bound - kBase, kPerModule) + 1;
}

ParameterKey parameter_key(const Vulnerability& v) {
    if (const auto* base = std::get_if<BaseVulnId>(&v.id)) {
        return base->base_index;
    }
    const auto& gen = std::get<GeneratedVulnId>(v.id);
    return GeneratedParams{gen.template_index, v.params.value_or(ParamSet{})};
}

bool is_distinct(const Vulnerability& a, const Vulnerability& b) {
    return a.component != b.component || parameter_key(a) != parameter_key(b);
}

AssignabilityVerdict is_cve_assignable(const Vulnerability& v) {
    AssignabilityVerdict verdict;
    verdict.recognized_cwe = find_cwe(v.cwe.id).has_value();

    const std::string_view name = v.component.name;
    const bool is_base = name == kBaseComponent;
    const std::optional<BigInt> module = module_of_component(name);
    verdict.identifiable_component = !name.empty() && (is_base || module.has_value());

    if (is_base) {
        if (const auto* base = std::get_if<BaseVulnId>(&v.id)) {
            verdict.independently_fixable =
                base->base_index >= 1 && base->base_index <= static_cast<int>(kBaseSetSize) &&
                v.location.file == base_file_name(base->base_index);
        }
    } else if (module) {
        const auto* gen = std::get_if<GeneratedVulnId>(&v.id);
        verdict.independently_fixable = gen != nullptr && gen->module_index == *module &&
                                        v.location.file == module_file_name(*module);
    }
    return verdict;
}

VulnId enumerate(const BigInt& n, int i) {
    require_non_negative(n, "module index n");
    if (i < 1 || i > kPerModule) {
        throw DomainError("template index must be in 1..5, got " + std::to_string(i));
    }
    return GeneratedVulnId{n, i};
}

std::pair<BigInt, int> enumerate_inverse(const VulnId& id) {
    const auto* gen = std::get_if<GeneratedVulnId>(&id);
    if (gen == nullptr) {
        throw DomainError(to_string(id) + " is a base entry, outside the image of f");
    }
    return {gen->module_index, gen->template_index};
}

InvalidationSet::InvalidationSet(std::initializer_list<int> columns, BigInt finite_instances) {
    for (int c : columns) {
        invalidate_column(c);
    }
    set_finite_instances(std::move(finite_instances));
}

void InvalidationSet::invalidate_column(int column) {
    if (column < 1 || column > kPerModule) {
        throw DomainError("invalidated column must be in 1..5, got " + std::to_string(column));
    }
    columns_.set(static_cast<std::size_t>(column - 1));
}

void InvalidationSet::set_finite_instances(BigInt s) {
    require_non_negative(s, "finite instance count s");
    finite_instances_ = std::move(s);
}

bool InvalidationSet::column_invalidated(int column) const {
    if (column < 1 || column > kPerModule) {
        return false;
    }
    return columns_.test(static_cast<std::size_t>(column - 1));
}

BigInt surviving_growth(const InvalidationSet& inv, const BigInt& k) {
    require_non_negative(k, "iteration count k");
    const BigInt rate = kPerModule - static_cast<int>(inv.column_count());
    BigInt survivors = rate * k + kBase - inv.finite_instances();
    return survivors < 0 ? BigInt(0) : survivors;
}

bool is_unbounded(const InvalidationSet& inv) { return inv.column_count() < kPerModule; }

std::optional<BigInt> min_iterations_surviving_exceeding(const InvalidationSet& inv,
                                                       const BigInt& bound) {
    require_non_negative(bound, "bound C");
    if (!is_unbounded(inv)) {
        return std::nullopt;
    }
    const BigInt rate = kPerModule - static_cast<int>(inv.column_count());
    // rate*k + 11 - s > C  <=>  k > (C - 11 + s) / rate
    const BigInt slack = bound - kBase + inv.finite_instances();
    if (slack < 0) {
        return BigInt(0);
    }
    return floor_div(slack, rate) + 1;
}

}  // namespace vulnfactory
