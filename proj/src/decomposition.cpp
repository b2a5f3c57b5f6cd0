#include "coopshare/decomposition.hpp"

#include "coopshare/errors.hpp"

#include <algorithm>
#include <set>

namespace coopshare {

namespace {

int distinct_positive_values(const std::vector<Rational>& residual) {
    std::set<std::string> seen;
    for (const Rational& r : residual)
        if (!r.is_zero())
            seen.insert(r.str());
    return static_cast<int>(seen.size());
}

} // namespace

Decomposition gm_decompose(const ValuationTable& v) {
    const CoalitionSet all = v.ground_set();
    if (v[all].is_zero())
        throw Error(ErrorCode::ZeroGame, "v(N) = 0 decomposes into nothing");

    std::vector<Rational> residual(v.size());
    for (CoalitionSet s = 0; s <= all; ++s)
        residual[s] = v[s];

    Decomposition d;
    int remaining = distinct_positive_values(residual);
    while (true) {
        // Minimum positive residual; the lowest bitmask attains it, which
        // keeps component traces deterministic (any minimizer would do).
        const Rational* min_pos = nullptr;
        for (CoalitionSet s = 0; s <= all; ++s)
            if (!residual[s].is_zero() && (!min_pos || residual[s] < *min_pos))
                min_pos = &residual[s];
        if (!min_pos)
            break;

        const Rational coefficient = *min_pos;
        std::vector<Rational> indicator(v.size(), Rational(0));
        for (CoalitionSet s = 0; s <= all; ++s) {
            if (!residual[s].is_zero()) {
                indicator[s] = Rational(1);
                residual[s] -= coefficient;
            }
        }
        d.components.push_back({coefficient, ValuationTable(v.player_count(), std::move(indicator))});

        const int now = distinct_positive_values(residual);
        if (now >= remaining)
            throw Error(ErrorCode::InternalError, "GM residual failed to lose a distinct value");
        remaining = now;
    }
    return d;
}

DecompositionCheck verify_recomposition(const ValuationTable& v, const Decomposition& d) {
    const CoalitionSet all = v.ground_set();
    for (const auto& comp : d.components) {
        if (comp.coefficient.is_negative() || comp.coefficient.is_zero())
            return {false, 0, "component coefficient " + comp.coefficient.str() + " not positive"};
        if (!classify_valuation(comp.table).simple)
            return {false, 0, "component table is not simple"};
        for (CoalitionSet s = 0; s <= all; ++s)
            for (int p : members_of(s))
                if (comp.table[s & ~singleton(p)] > comp.table[s])
                    return {false, s, "component table not monotone at {" + coalition_key(s) + "}"};
    }
    for (CoalitionSet s = 0; s <= all; ++s) {
        Rational sum(0);
        for (const auto& comp : d.components)
            if (!comp.table[s].is_zero())
                sum += comp.coefficient;
        if (sum != v[s])
            return {false, s,
                    "recomposition at {" + coalition_key(s) + "}: " + sum.str() + " != " + v[s].str()};
    }
    return {};
}

DecompositionCheck verify_prefix_consistency(const Game& g, int step) {
    if (step < 1 || step > g.order().length())
        throw Error(ErrorCode::StepOutOfRange, "step " + std::to_string(step));
    const CoalitionSet prefix = g.order().prefix_set(step);
    const std::vector<int> members = members_of(prefix);

    std::optional<Decomposition> full;
    if (!g.valuation()[g.valuation().ground_set()].is_zero())
        full = gm_decompose(g.valuation());

    const ValuationTable restricted = restrict_to(g.valuation(), prefix);
    std::optional<Decomposition> sub;
    if (!restricted[restricted.ground_set()].is_zero())
        sub = gm_decompose(restricted);

    for (CoalitionSet t = 0; t < (CoalitionSet{1} << members.size()); ++t) {
        CoalitionSet orig = 0;
        for (std::size_t bit = 0; bit < members.size(); ++bit)
            if (contains(t, static_cast<int>(bit)))
                orig |= singleton(members[bit]);

        Rational full_sum(0);
        if (full)
            for (const auto& comp : full->components)
                if (!comp.table[orig].is_zero())
                    full_sum += comp.coefficient;
        Rational sub_sum(0);
        if (sub)
            for (const auto& comp : sub->components)
                if (!comp.table[t].is_zero())
                    sub_sum += comp.coefficient;

        if (full_sum != sub_sum)
            return {false, orig,
                    "prefix inconsistency at {" + coalition_key(orig) + "}: " + full_sum.str() +
                        " != " + sub_sum.str()};
    }
    return {};
}

AllocationTrajectory run_extended(Rule base, const Game& g, RuleContext* ctx) {
    RuleContext local;
    RuleContext& c = ctx ? *ctx : local;

    bool ir = false;
    if (base == Rule::IR_EULMES) {
        ir = true;
        base = Rule::ULMES;
    }
    if (base != Rule::RFC && base != Rule::ULMES)
        throw Error(ErrorCode::InternalError, "extended run over unsupported base rule");
    if (ir && !c.classes(g).superadditive) {
        const auto pair = find_superadditivity_violation(g.valuation());
        std::string detail = "valuation is not superadditive";
        if (pair)
            detail += ": v({" + coalition_key(pair->first) + "}) + v({" + coalition_key(pair->second) +
                      "}) > v({" + coalition_key(pair->first | pair->second) + "})";
        throw Error(ErrorCode::NotSuperadditive, detail);
    }

    AllocationTrajectory total;
    total.rows.assign(g.order().length(), std::vector<Rational>(g.player_count(), Rational(0)));

    for (const auto& [coefficient, table] : c.decomposition(g)) {
        const Game component_game(table, g.order(), g.labels());
        AllocationTrajectory part;
        if (base == Rule::RFC)
            part = detail::run_rfc_unchecked(component_game);
        else if (ir)
            // Component singleton values may exceed the component marginal;
            // ULMES then shrinks the sharing set to the arriver alone, so the
            // negative residual exactly cancels against the granted singleton.
            part = detail::ir_refine_unchecked(Rule::ULMES, component_game, nullptr);
        else
            part = run_ulmes(component_game);
        for (int t = 0; t < total.step_count(); ++t)
            for (int p = 0; p < g.player_count(); ++p)
                if (!part.rows[t][p].is_zero())
                    total.rows[t][p] += coefficient * part.rows[t][p];
    }
    return total;
}

AllocationTrajectory run_rule(Rule r, const Game& g, RuleContext* ctx) {
    switch (r) {
    case Rule::DMC: return run_dmc(g);
    case Rule::SV: return run_sv(g, ctx);
    case Rule::RFC: return run_rfc(g, ctx);
    case Rule::MES: return run_mes(g);
    case Rule::NDMES: return run_ndmes(g, ctx);
    case Rule::ULMES: return run_ulmes(g);
    case Rule::ERFC: return run_extended(Rule::RFC, g, ctx);
    case Rule::EULMES: return run_extended(Rule::ULMES, g, ctx);
    case Rule::IR_MES: return ir_refine(Rule::MES, g, ctx);
    case Rule::IR_NDMES: return ir_refine(Rule::NDMES, g, ctx);
    case Rule::IR_EULMES: return run_extended(Rule::IR_EULMES, g, ctx);
    }
    throw Error(ErrorCode::InternalError, "unknown rule");
}

} // namespace coopshare
