#include "vulnfactory/model_checker.hpp"

#include "vulnfactory/census.hpp"
#include "vulnfactory/errors.hpp"

namespace vulnfactory {

TsState initial_state() { return {0, total_after(0)}; }

TsState successor(const TsState& s) { return {s.k + 1, s.count + 5}; }

Verdict check_bound(const BigInt& bound) {
    if (bound < 0) {
        throw DomainError("bound C must be non-negative");
    }
    Verdict verdict{bound, false, {}};
    const BigInt expected = counterexample_length(bound);
    if (expected <= BigInt(verdict.trace.states.max_size())) {
        verdict.trace.states.reserve(static_cast<std::size_t>(expected));
    }

    TsState s = initial_state();
    verdict.trace.states.push_back(s);
    while (s.count <= bound) {
        s = successor(s);
        verdict.trace.states.push_back(s);
    }
    verdict.violated = true;
    return verdict;
}

BigInt counterexample_length(const BigInt& bound) {
    return min_iterations_exceeding(bound) + 1;
}

BigInt published_counterexample_length(const BigInt& bound) {
    const BigInt num = bound - 11;
    if (num <= 0) {
        return 1;
    }
    BigInt ceil = num / 5;
    if (num % 5 != 0) {
        ceil += 1;
    }
    return ceil + 1;
}

bool is_valid_trace(const Trace& trace) {
    if (trace.states.empty() || trace.states.front() != initial_state()) {
        return false;
    }
    for (std::size_t i = 0; i < trace.states.size(); ++i) {
        const TsState& s = trace.states[i];
        if (s.k < 0 || s.count != total_after(s.k)) {
            return false;
        }
        if (i > 0 && s != successor(trace.states[i - 1])) {
            return false;
        }
    }
    return true;
}

bool is_minimal_counterexample(const Trace& trace, const BigInt& bound) {
    if (!is_valid_trace(trace) || trace.final_state().count <= bound) {
        return false;
    }
    for (std::size_t i = 0; i + 1 < trace.states.size(); ++i) {
        if (trace.states[i].count > bound) {
            return false;
        }
    }
    return true;
}

}  // namespace vulnfactory
