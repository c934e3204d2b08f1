#pragma once

#include <cstddef>
#include <vector>

#include "vulnfactory/bigint.hpp"

namespace vulnfactory {

/// s_k = (k, |V_k|) of the factory transition system.
struct TsState {
    BigInt k;
    BigInt count;

    friend bool operator==(const TsState&, const TsState&) = default;
};

/// s_0 = (0, 11).
[[nodiscard]] TsState initial_state();

/// The single outgoing transition: (k, c) -> (k + 1, c + 5).
[[nodiscard]] TsState successor(const TsState& s);

/// Counterexample path starting at s_0. Length counts states.
struct Trace {
    std::vector<TsState> states;

    [[nodiscard]] std::size_t length() const noexcept { return states.size(); }
    [[nodiscard]] const TsState& final_state() const { return states.back(); }
};

struct Verdict {
    BigInt bound;
    bool violated = false;
    Trace trace;
};

/// Checks AG(count <= C) by walking the unique path from s_0 until the
/// first state with count > C. The property fails for every finite C, so
/// `violated` is always true and the trace ends at the first violating
/// state. Runtime is linear in C / 5.
[[nodiscard]] Verdict check_bound(const BigInt& bound);

/// Closed form for the walk length: 1 when C < 11, otherwise
/// floor((C - 11) / 5) + 2.
[[nodiscard]] BigInt counterexample_length(const BigInt& bound);

/// The published formula max(1, ceil((C - 11) / 5) + 1). Agrees with
/// counterexample_length except when C >= 11 and (C - 11) is a multiple of 5,
/// where it is one state short.
[[nodiscard]] BigInt published_counterexample_length(const BigInt& bound);

/// Replays a trace: starts at s_0, every step follows the transition relation
/// and every state satisfies the count invariant.
[[nodiscard]] bool is_valid_trace(const Trace& trace);

/// A valid trace whose last state violates the bound and no earlier state does.
[[nodiscard]] bool is_minimal_counterexample(const Trace& trace, const BigInt& bound);

}  // namespace vulnfactory
