#include "coopshare/rules.hpp"

#include "coopshare/decomposition.hpp"
#include "coopshare/errors.hpp"

#include <algorithm>

namespace coopshare {

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::DMC: return "dmc";
    case Rule::SV: return "sv";
    case Rule::RFC: return "rfc";
    case Rule::MES: return "mes";
    case Rule::NDMES: return "ndmes";
    case Rule::ULMES: return "ulmes";
    case Rule::ERFC: return "erfc";
    case Rule::EULMES: return "eulmes";
    case Rule::IR_MES: return "ir-mes";
    case Rule::IR_NDMES: return "ir-ndmes";
    case Rule::IR_EULMES: return "ir-eulmes";
    }
    return "?";
}

std::optional<Rule> parse_rule(const std::string& name) {
    for (Rule r : {Rule::DMC, Rule::SV, Rule::RFC, Rule::MES, Rule::NDMES, Rule::ULMES, Rule::ERFC,
                   Rule::EULMES, Rule::IR_MES, Rule::IR_NDMES, Rule::IR_EULMES})
        if (name == rule_name(r))
            return r;
    return std::nullopt;
}

void RuleContext::bind(const std::shared_ptr<const ValuationTable>& v) {
    if (bound_ == v)
        return;
    bound_ = v;
    classes_.reset();
    decomposition_.reset();
    shapley_by_set_.assign(v->size(), {});
    dummies_by_set_.assign(v->size(), ~CoalitionSet{0});
}

const ValuationClass& RuleContext::classes(const Game& g) {
    bind(g.valuation_ptr());
    if (!classes_)
        classes_ = classify_valuation(g.valuation());
    return *classes_;
}

const std::vector<Rational>& RuleContext::shapley_on(const Game& g, CoalitionSet ground) {
    bind(g.valuation_ptr());
    auto& slot = shapley_by_set_[ground];
    if (slot.empty())
        slot = shapley_values_on(g.valuation(), ground);
    return slot;
}

CoalitionSet RuleContext::dummies_on(const Game& g, CoalitionSet ground) {
    bind(g.valuation_ptr());
    auto& slot = dummies_by_set_[ground];
    if (slot == ~CoalitionSet{0})
        slot = dummy_players(g.valuation(), ground);
    return slot;
}

const std::vector<RuleContext::WeightedTable>& RuleContext::decomposition(const Game& g) {
    bind(g.valuation_ptr());
    if (!decomposition_) {
        decomposition_.emplace();
        if (!g.valuation()[g.valuation().ground_set()].is_zero())
            for (auto& comp : gm_decompose(g.valuation()).components)
                decomposition_->emplace_back(
                    comp.coefficient, std::make_shared<const ValuationTable>(std::move(comp.table)));
    }
    return *decomposition_;
}

namespace {

AllocationTrajectory zero_trajectory(const Game& g) {
    AllocationTrajectory t;
    t.rows.assign(g.order().length(), std::vector<Rational>(g.player_count(), Rational(0)));
    return t;
}

// Cumulative rules: row t starts as a copy of row t-1.
std::vector<Rational>& carry_row(AllocationTrajectory& traj, int step) {
    if (step > 1)
        traj.rows[step - 1] = traj.rows[step - 2];
    return traj.rows[step - 1];
}

void split_equally(std::vector<Rational>& row, CoalitionSet members, const Rational& amount) {
    if (amount.is_zero())
        return;
    const Rational share = amount / Rational(set_size(members));
    for (int p : members_of(members))
        row[p] += share;
}

} // namespace

AllocationTrajectory run_dmc(const Game& g) {
    AllocationTrajectory traj = zero_trajectory(g);
    for (int t = 1; t <= g.order().length(); ++t) {
        auto& row = carry_row(traj, t);
        const int arriver = g.order().arriver_at(t);
        row[arriver] += marginal_contribution(g.valuation(), g.order().prefix_set(t - 1), arriver);
    }
    return traj;
}

AllocationTrajectory run_sv(const Game& g, RuleContext* ctx) {
    RuleContext local;
    RuleContext& c = ctx ? *ctx : local;
    AllocationTrajectory traj = zero_trajectory(g);
    for (int t = 1; t <= g.order().length(); ++t)
        traj.rows[t - 1] = c.shapley_on(g, g.order().prefix_set(t));
    return traj;
}

namespace detail {

AllocationTrajectory run_rfc_unchecked(const Game& g) {
    AllocationTrajectory traj = zero_trajectory(g);
    for (int t = 1; t <= g.order().length(); ++t) {
        auto& row = carry_row(traj, t);
        const CoalitionSet prefix = g.order().prefix_set(t);
        const Rational marginal = g.valuation()[prefix] - g.valuation()[g.order().prefix_set(t - 1)];
        if (marginal.is_zero())
            continue; // nothing to distribute; no critical set is formed
        int first_critical = -1;
        int best_pos = g.order().length() + 1;
        for (int j : members_of(prefix)) {
            if (g.valuation()[prefix] > g.valuation()[prefix & ~singleton(j)] &&
                g.order().position_of(j) < best_pos) {
                best_pos = g.order().position_of(j);
                first_critical = j;
            }
        }
        row[first_critical] += marginal;
    }
    return traj;
}

} // namespace detail

AllocationTrajectory run_rfc(const Game& g, RuleContext* ctx) {
    RuleContext local;
    RuleContext& c = ctx ? *ctx : local;
    if (!c.classes(g).simple)
        throw Error(ErrorCode::NotSimpleGame, "RFC is defined for simple games only");
    return detail::run_rfc_unchecked(g);
}

AllocationTrajectory run_mes(const Game& g) {
    AllocationTrajectory traj = zero_trajectory(g);
    for (int t = 1; t <= g.order().length(); ++t) {
        auto& row = carry_row(traj, t);
        const int arriver = g.order().arriver_at(t);
        split_equally(row, g.order().prefix_set(t),
                      marginal_contribution(g.valuation(), g.order().prefix_set(t - 1), arriver));
    }
    return traj;
}

AllocationTrajectory run_ndmes(const Game& g, RuleContext* ctx, DummyDetection detection) {
    RuleContext local;
    RuleContext& c = ctx ? *ctx : local;
    // Prop.-5 dispatch: the singleton test is valid exactly when the table is
    // subadditive, so the class certificate gates the fast path.
    const bool fast = detection == DummyDetection::FastPath ||
                      (detection == DummyDetection::Auto && c.classes(g).subadditive);

    AllocationTrajectory traj = zero_trajectory(g);
    for (int t = 1; t <= g.order().length(); ++t) {
        auto& row = carry_row(traj, t);
        const int arriver = g.order().arriver_at(t);
        const Rational marginal =
            marginal_contribution(g.valuation(), g.order().prefix_set(t - 1), arriver);
        if (marginal.is_zero())
            continue;
        const CoalitionSet prefix = g.order().prefix_set(t);
        CoalitionSet dummies = 0;
        if (fast) {
            for (int p : members_of(prefix))
                if (is_dummy_subadditive(g.valuation(), p))
                    dummies |= singleton(p);
        } else {
            dummies = c.dummies_on(g, prefix);
        }
        split_equally(row, prefix & ~dummies, marginal);
    }
    return traj;
}

SharingSet ulmes_sharing_set(const Game& g, int step) {
    if (step < 1 || step > g.order().length())
        throw Error(ErrorCode::StepOutOfRange, "step " + std::to_string(step));
    const CoalitionSet prefix = g.order().prefix_set(step);
    const Rational& target = g.valuation()[prefix];
    const int arriver = g.order().arriver_at(step);

    // Scan earlier arrivers from latest to earliest; the arriver herself is
    // exempt. A candidate is dropped when the remaining set, which always
    // includes the arriver, still reaches v(prefix).
    CoalitionSet members = prefix;
    for (int pos = step - 1; pos >= 1; --pos) {
        const int candidate = g.order().arriver_at(pos);
        const CoalitionSet without = (members & ~singleton(candidate)) | singleton(arriver);
        if (g.valuation()[without] == target)
            members &= ~singleton(candidate);
    }
    return SharingSet{step, members};
}

AllocationTrajectory run_ulmes(const Game& g) {
    AllocationTrajectory traj = zero_trajectory(g);
    for (int t = 1; t <= g.order().length(); ++t) {
        auto& row = carry_row(traj, t);
        const int arriver = g.order().arriver_at(t);
        const Rational marginal =
            marginal_contribution(g.valuation(), g.order().prefix_set(t - 1), arriver);
        if (marginal.is_zero())
            continue;
        split_equally(row, ulmes_sharing_set(g, t).members, marginal);
    }
    return traj;
}

namespace detail {

AllocationTrajectory ir_refine_unchecked(Rule base, const Game& g, RuleContext* ctx) {
    RuleContext local;
    RuleContext& c = ctx ? *ctx : local;
    const bool fast_dummies = base == Rule::NDMES && c.classes(g).subadditive;

    AllocationTrajectory traj = zero_trajectory(g);
    for (int t = 1; t <= g.order().length(); ++t) {
        auto& row = carry_row(traj, t);
        const int arriver = g.order().arriver_at(t);
        const CoalitionSet prefix = g.order().prefix_set(t);
        const Rational& solo = g.valuation()[singleton(arriver)];
        const Rational residual =
            marginal_contribution(g.valuation(), g.order().prefix_set(t - 1), arriver) - solo;

        row[arriver] += solo;
        if (residual.is_zero())
            continue;

        CoalitionSet members = 0;
        switch (base) {
        case Rule::MES:
            members = prefix;
            break;
        case Rule::NDMES:
            if (fast_dummies) {
                members = prefix;
                for (int p : members_of(prefix))
                    if (is_dummy_subadditive(g.valuation(), p))
                        members &= ~singleton(p);
            } else {
                members = prefix & ~c.dummies_on(g, prefix);
            }
            break;
        case Rule::ULMES:
            members = ulmes_sharing_set(g, t).members;
            break;
        default:
            throw Error(ErrorCode::InternalError, "IR refinement over unsupported base rule");
        }
        split_equally(row, members, residual);
    }
    return traj;
}

} // namespace detail

AllocationTrajectory ir_refine(Rule base, const Game& g, RuleContext* ctx) {
    RuleContext local;
    RuleContext& c = ctx ? *ctx : local;
    if (!c.classes(g).superadditive) {
        const auto pair = find_superadditivity_violation(g.valuation());
        std::string detail = "valuation is not superadditive";
        if (pair)
            detail += ": v({" + coalition_key(pair->first) + "}) + v({" + coalition_key(pair->second) +
                      "}) > v({" + coalition_key(pair->first | pair->second) + "})";
        throw Error(ErrorCode::NotSuperadditive, detail);
    }
    return detail::ir_refine_unchecked(base, g, &c);
}

} // namespace coopshare
