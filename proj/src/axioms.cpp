#include "coopshare/axioms.hpp"

#include "coopshare/errors.hpp"
#include "coopshare/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>

namespace coopshare {

const char* axiom_name(Axiom a) {
    switch (a) {
    case Axiom::EFF: return "eff";
    case Axiom::STAY: return "stay";
    case Axiom::S_STAY: return "s-stay";
    case Axiom::PART: return "part";
    case Axiom::OD: return "od";
    case Axiom::IR: return "ir";
    case Axiom::EA: return "ea";
    case Axiom::SF: return "sf";
    }
    return "?";
}

std::optional<Axiom> parse_axiom(const std::string& name) {
    for (Axiom a : {Axiom::EFF, Axiom::STAY, Axiom::S_STAY, Axiom::PART, Axiom::OD, Axiom::IR,
                    Axiom::EA, Axiom::SF})
        if (name == axiom_name(a))
            return a;
    return std::nullopt;
}

namespace {

AxiomVerdict pass_verdict(Axiom a, Rule r) {
    return AxiomVerdict{a, r, true, std::nullopt, 1};
}

AxiomVerdict fail_verdict(Axiom a, Rule r, Witness w) {
    return AxiomVerdict{a, r, false, std::move(w), 1};
}

} // namespace

AxiomVerdict check_efficiency(Rule rule, const Game& g, RuleContext* ctx) {
    const AllocationTrajectory traj = run_rule(rule, g, ctx);
    const int bad = first_inefficient_row(g, traj);
    if (bad == 0)
        return pass_verdict(Axiom::EFF, rule);
    Rational sum(0);
    for (const Rational& share : traj.row(bad))
        sum += share;
    return fail_verdict(Axiom::EFF, rule,
                        Witness{g, std::nullopt, -1, bad, sum,
                                g.valuation()[g.order().prefix_set(bad)], "eff"});
}

AxiomVerdict check_stay(Rule rule, const Game& g, RuleContext* ctx) {
    const AllocationTrajectory traj = run_rule(rule, g, ctx);
    for (int player = 0; player < g.player_count(); ++player) {
        for (int t = g.order().position_of(player) + 1; t <= traj.step_count(); ++t) {
            if (traj.row(t)[player] < traj.row(t - 1)[player])
                return fail_verdict(Axiom::STAY, rule,
                                    Witness{g, std::nullopt, player, t, traj.row(t)[player],
                                            traj.row(t - 1)[player], "stay"});
        }
    }
    return pass_verdict(Axiom::STAY, rule);
}

AxiomVerdict check_s_stay(Rule rule, const Game& g, RuleContext* ctx) {
    AxiomVerdict stay = check_stay(rule, g, ctx);
    if (!stay.pass) {
        stay.axiom = Axiom::S_STAY;
        return stay;
    }
    const AllocationTrajectory traj = run_rule(rule, g, ctx);
    for (int t = 1; t <= g.order().length(); ++t) {
        if (!is_contributional(g, t))
            continue;
        const CoalitionSet prefix = g.order().prefix_set(t);
        const int arriver = g.order().arriver_at(t);
        for (int j : members_of(prefix & ~singleton(arriver))) {
            if (g.valuation()[prefix] <= g.valuation()[prefix & ~singleton(j)])
                continue;
            const Rational& now = traj.row(t)[j];
            const Rational& at_arrival = traj.row(g.order().position_of(j))[j];
            if (!(now > at_arrival))
                return fail_verdict(Axiom::S_STAY, rule,
                                    Witness{g, std::nullopt, j, t, now, at_arrival, "s-stay"});
        }
    }
    return pass_verdict(Axiom::S_STAY, rule);
}

AxiomVerdict check_part(Rule rule, const Game& g, RuleContext* ctx) {
    const AllocationTrajectory traj = run_rule(rule, g, ctx);
    for (int t = 1; t <= g.order().length(); ++t) {
        if (!is_contributional(g, t))
            continue;
        const int arriver = g.order().arriver_at(t);
        if (!(traj.row(t)[arriver] > Rational(0)))
            return fail_verdict(Axiom::PART, rule,
                                Witness{g, std::nullopt, arriver, t, traj.row(t)[arriver],
                                        Rational(0), "part"});
    }
    return pass_verdict(Axiom::PART, rule);
}

AxiomVerdict check_od(Rule rule, const Game& g, RuleContext* ctx) {
    const AllocationTrajectory traj = run_rule(rule, g, ctx);
    for (int t = 1; t <= g.order().length(); ++t) {
        const CoalitionSet prefix = g.order().prefix_set(t);
        // Dummy detection here is always the exhaustive definition, never the
        // rule's own shortcut, so the checker stays independent.
        for (int j : members_of(prefix)) {
            if (!is_dummy(g.valuation(), prefix, j))
                continue;
            if (!traj.row(t)[j].is_zero())
                return fail_verdict(Axiom::OD, rule,
                                    Witness{g, std::nullopt, j, t, traj.row(t)[j], Rational(0), "od"});
        }
    }
    return pass_verdict(Axiom::OD, rule);
}

AxiomVerdict check_ir(Rule rule, const Game& g, RuleContext* ctx) {
    const AllocationTrajectory traj = run_rule(rule, g, ctx);
    const auto& final_row = traj.final_row();
    for (int i = 0; i < g.player_count(); ++i) {
        if (final_row[i] < g.valuation()[singleton(i)])
            return fail_verdict(Axiom::IR, rule,
                                Witness{g, std::nullopt, i, g.order().length(), final_row[i],
                                        g.valuation()[singleton(i)], "ir"});
    }
    return pass_verdict(Axiom::IR, rule);
}

namespace {

std::vector<std::vector<int>> base_orders(const ValuationTable& v, const EaScope& scope) {
    if (scope.base)
        return {scope.base->sequence()};
    const int n = v.player_count();
    if (n > enumeration_cap())
        throw Error(ErrorCode::ScopeTooLarge,
                    "all-order EA scope at n = " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(enumeration_cap()));
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(seq);
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

} // namespace

AxiomVerdict check_ea(Rule rule, const ValuationTable& v, const EaScope& scope, RuleContext* ctx) {
    RuleContext local;
    RuleContext& c = ctx ? *ctx : local;
    const int n = v.player_count();

    const std::vector<std::vector<int>> bases = base_orders(v, scope);
    const Game shared(v, ArrivalOrder(bases.front())); // one table shared by all runs

    for (const std::vector<int>& base : bases) {
        const Game g = shared.with_order(ArrivalOrder(base));
        const std::vector<Rational> honest = run_rule(rule, g, &c).final_row();

        // Deviations are delays only: the player at position p re-inserts at
        // a strictly later position q, everyone else keeping relative order.
        for (int p = 1; p < n; ++p) {
            const int player = base[p - 1];
            for (int q = p + 1; q <= n; ++q) {
                std::vector<int> delayed = base;
                delayed.erase(delayed.begin() + (p - 1));
                delayed.insert(delayed.begin() + (q - 1), player);
                const Game delayed_game = shared.with_order(ArrivalOrder(delayed));
                const std::vector<Rational> shifted = run_rule(rule, delayed_game, &c).final_row();
                if (honest[player] < shifted[player])
                    return fail_verdict(Axiom::EA, rule,
                                        Witness{g, delayed_game.order(), player, 0, honest[player],
                                                shifted[player], "ea"});
            }
        }
    }
    return pass_verdict(Axiom::EA, rule);
}

AxiomVerdict check_sf(Rule rule, const ValuationTable& v, RuleContext* ctx) {
    RuleContext local;
    RuleContext& c = ctx ? *ctx : local;
    const int n = v.player_count();
    if (n > enumeration_cap())
        throw Error(ErrorCode::ScopeTooLarge,
                    "SF enumeration at n = " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(enumeration_cap()));

    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    const Game identity_game(v, ArrivalOrder(seq));

    std::vector<Rational> totals(n, Rational(0));
    long order_count = 0;
    do {
        const Game g = identity_game.with_order(ArrivalOrder(seq));
        const std::vector<Rational> final_row = run_rule(rule, g, &c).final_row();
        for (int i = 0; i < n; ++i)
            totals[i] += final_row[i];
        ++order_count;
    } while (std::next_permutation(seq.begin(), seq.end()));

    const std::vector<Rational>& sv = c.shapley_on(identity_game, v.ground_set());
    for (int i = 0; i < n; ++i) {
        const Rational average = totals[i] / Rational(order_count);
        if (average != sv[i])
            return fail_verdict(Axiom::SF, rule,
                                Witness{identity_game, std::nullopt, i, 0, average, sv[i], "sf"});
    }
    return pass_verdict(Axiom::SF, rule);
}

AxiomVerdict check_axiom(Axiom a, Rule rule, const Game& g, RuleContext* ctx) {
    switch (a) {
    case Axiom::EFF: return check_efficiency(rule, g, ctx);
    case Axiom::STAY: return check_stay(rule, g, ctx);
    case Axiom::S_STAY: return check_s_stay(rule, g, ctx);
    case Axiom::PART: return check_part(rule, g, ctx);
    case Axiom::OD: return check_od(rule, g, ctx);
    case Axiom::IR: return check_ir(rule, g, ctx);
    case Axiom::EA: return check_ea(rule, g.valuation(), EaScope::base_order(g.order()), ctx);
    case Axiom::SF: return check_sf(rule, g.valuation(), ctx);
    }
    throw Error(ErrorCode::InternalError, "unknown axiom");
}

bool replay_witness(const AxiomVerdict& verdict) {
    if (verdict.pass || !verdict.witness)
        return false;
    const Witness& w = *verdict.witness;
    const Game& g = w.game;

    if (w.relation == "ea") {
        if (!w.deviation)
            return false;
        RuleContext ctx;
        const Rational lhs = run_rule(verdict.rule, g, &ctx).final_row()[w.player];
        const Rational rhs =
            run_rule(verdict.rule, g.with_order(*w.deviation), &ctx).final_row()[w.player];
        return lhs == w.lhs && rhs == w.rhs && lhs < rhs;
    }
    if (w.relation == "sf") {
        RuleContext ctx;
        std::vector<int> seq(g.player_count());
        std::iota(seq.begin(), seq.end(), 0);
        Rational total(0);
        long orders = 0;
        do {
            total += run_rule(verdict.rule, g.with_order(ArrivalOrder(seq)), &ctx)
                         .final_row()[w.player];
            ++orders;
        } while (std::next_permutation(seq.begin(), seq.end()));
        const Rational lhs = total / Rational(orders);
        const Rational rhs = shapley_values(g.valuation())[w.player];
        return lhs == w.lhs && rhs == w.rhs && lhs != rhs;
    }

    const AllocationTrajectory traj = run_rule(verdict.rule, g);
    if (w.relation == "eff") {
        Rational sum(0);
        for (const Rational& share : traj.row(w.step))
            sum += share;
        return sum == w.lhs && g.valuation()[g.order().prefix_set(w.step)] == w.rhs && w.lhs != w.rhs;
    }
    if (w.relation == "stay")
        return traj.row(w.step)[w.player] == w.lhs && traj.row(w.step - 1)[w.player] == w.rhs &&
               w.lhs < w.rhs;
    if (w.relation == "s-stay")
        return traj.row(w.step)[w.player] == w.lhs &&
               traj.row(g.order().position_of(w.player))[w.player] == w.rhs && !(w.lhs > w.rhs);
    if (w.relation == "part")
        return traj.row(w.step)[w.player] == w.lhs && w.rhs.is_zero() && !(w.lhs > w.rhs);
    if (w.relation == "od")
        return traj.row(w.step)[w.player] == w.lhs && w.rhs.is_zero() && !w.lhs.is_zero() &&
               is_dummy(g.valuation(), g.order().prefix_set(w.step), w.player);
    if (w.relation == "ir")
        return traj.final_row()[w.player] == w.lhs && g.valuation()[singleton(w.player)] == w.rhs &&
               w.lhs < w.rhs;
    return false;
}

nlohmann::json verdict_to_json(const AxiomVerdict& verdict) {
    nlohmann::json out{
        {"rule", rule_name(verdict.rule)},
        {"axiom", axiom_name(verdict.axiom)},
        {"status", verdict.pass ? "no-counterexample-found" : "fail"},
        {"witness", nullptr},
        {"games_checked", verdict.games_checked},
    };
    if (verdict.witness) {
        const Witness& w = *verdict.witness;
        nlohmann::json jw{
            {"game", game_to_json(w.game)},
            {"player", w.player + 1},
            {"step", w.step},
            {"lhs", w.lhs.str()},
            {"rhs", w.rhs.str()},
            {"relation", w.relation},
        };
        std::vector<int> order;
        for (int p : w.game.order().sequence())
            order.push_back(p + 1);
        jw["order"] = order;
        if (w.deviation) {
            std::vector<int> dev;
            for (int p : w.deviation->sequence())
                dev.push_back(p + 1);
            jw["deviation"] = dev;
        }
        out["witness"] = jw;
    }
    return out;
}

} // namespace coopshare
