#pragma once

#include "coopshare/game.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coopshare {

/// Every runnable value-sharing rule, extended and IR-refined variants
/// included. The base six are the trajectory procedures; the e-variants run
/// the base rule over the GM decomposition; the IR-variants wrap a sharing
/// set with the singleton-first refinement.
enum class Rule {
    DMC,
    SV,
    RFC,
    MES,
    NDMES,
    ULMES,
    ERFC,
    EULMES,
    IR_MES,
    IR_NDMES,
    IR_EULMES,
};

const char* rule_name(Rule r);
std::optional<Rule> parse_rule(const std::string& name);

/// Arrival-step sharing set: the members that split the step's marginal.
struct SharingSet {
    int step = 0;
    CoalitionSet members = 0;
};

/// NDMES dummy detection: Auto follows the Prop.-5 dispatch (fast path only
/// when the table is certified subadditive); the forced modes exist for the
/// equivalence harness.
enum class DummyDetection { Auto, Exhaustive, FastPath };

/// Per-valuation caches shared across many runs of the same table under
/// different orders (order enumeration is the harness's hot path). The
/// context keeps the bound table alive, so cached results can never go
/// stale; binding a different table resets everything.
class RuleContext {
public:
    using WeightedTable = std::pair<Rational, std::shared_ptr<const ValuationTable>>;

    RuleContext() = default;

    void bind(const std::shared_ptr<const ValuationTable>& v);

    const ValuationClass& classes(const Game& g);
    const std::vector<Rational>& shapley_on(const Game& g, CoalitionSet ground);
    CoalitionSet dummies_on(const Game& g, CoalitionSet ground);

    /// GM decomposition of the bound table; empty for a zero game. Component
    /// tables are shared so extended runs under many orders reuse them.
    const std::vector<WeightedTable>& decomposition(const Game& g);

private:
    std::shared_ptr<const ValuationTable> bound_;
    std::optional<ValuationClass> classes_;
    std::vector<std::vector<Rational>> shapley_by_set_;
    std::vector<CoalitionSet> dummies_by_set_;
    std::optional<std::vector<WeightedTable>> decomposition_;
};

AllocationTrajectory run_dmc(const Game& g);
AllocationTrajectory run_sv(const Game& g, RuleContext* ctx = nullptr);
AllocationTrajectory run_rfc(const Game& g, RuleContext* ctx = nullptr);
AllocationTrajectory run_mes(const Game& g);
AllocationTrajectory run_ndmes(const Game& g, RuleContext* ctx = nullptr,
                               DummyDetection detection = DummyDetection::Auto);
AllocationTrajectory run_ulmes(const Game& g);

/// The ULMES elimination scan for step t: starting from the full prefix, the
/// candidates are visited in decreasing arrival position (the arriver is
/// exempt) and dropped whenever the remaining members still reach the prefix
/// value. The survivors' value equals v(prefix t) on return.
SharingSet ulmes_sharing_set(const Game& g, int step);

/// IR refinement of MES / NDMES / ULMES: each arriver first takes her
/// singleton value, and the residual marginal is split equally over the base
/// rule's sharing set. Requires a superadditive valuation (the residual is
/// negative otherwise); throws Error{NotSuperadditive} with a violating
/// disjoint pair.
AllocationTrajectory ir_refine(Rule base, const Game& g, RuleContext* ctx = nullptr);

/// Dispatcher over all rules, extended variants included.
AllocationTrajectory run_rule(Rule r, const Game& g, RuleContext* ctx = nullptr);

namespace detail {

// Precondition-free entry points for component runs inside run_extended:
// components are simple by construction and their singleton values may
// exceed the component marginal.
AllocationTrajectory run_rfc_unchecked(const Game& g);
AllocationTrajectory ir_refine_unchecked(Rule base, const Game& g, RuleContext* ctx);

} // namespace detail

} // namespace coopshare
