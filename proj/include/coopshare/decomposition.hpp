#pragma once

#include "coopshare/rules.hpp"

#include <optional>
#include <vector>

namespace coopshare {

/// One GM component: a positive coefficient and a simple (0-1 monotone,
/// normalized, table(N)=1) valuation over the same players.
struct DecompositionComponent {
    Rational coefficient;
    ValuationTable table;
};

/// Ordered greedy-monotone decomposition: for every coalition T,
/// v(T) = sum_k coefficient_k * table_k(T) exactly.
struct Decomposition {
    std::vector<DecompositionComponent> components;
};

/// Greedy Monotone decomposition. Peels the minimum positive residual value
/// off the support of the residual until nothing is left; the number of
/// components equals the number of distinct positive values of v. Throws
/// Error{ZeroGame} when v(N) = 0 (the decomposition would be empty).
Decomposition gm_decompose(const ValuationTable& v);

struct DecompositionCheck {
    bool ok = true;
    CoalitionSet witness = 0;
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Exact recomposition identity over all 2^n coalitions, plus per-component
/// 0-1-ness, normalization and monotonicity. On failure the first violating
/// coalition is reported.
DecompositionCheck verify_recomposition(const ValuationTable& v, const Decomposition& d);

/// Valuewise consistency of D(G) against D(G^t): for every coalition within
/// the prefix, both component sums must reproduce the same value. Component
/// lists may differ in length (fully-peeled components restrict to zero).
DecompositionCheck verify_prefix_consistency(const Game& g, int step);

/// Runs `base` (RFC, ULMES, or ULMES under the IR refinement) on every GM
/// component with G's arrival order and returns the coefficient-weighted sum
/// of the component trajectories. A zero game yields an all-zero trajectory.
AllocationTrajectory run_extended(Rule base, const Game& g, RuleContext* ctx = nullptr);

} // namespace coopshare
