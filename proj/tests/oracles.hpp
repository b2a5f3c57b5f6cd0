#pragma once

#include "coopshare/decomposition.hpp"
#include "coopshare/game.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace coopshare::oracle {

// Shapley value by brute-force order enumeration: average each member's
// arrival marginal over all |ground|! permutations. Independent of the
// subset-sum implementation it cross-checks.
inline std::vector<Rational> shapley_by_enumeration(const ValuationTable& v, CoalitionSet ground) {
    std::vector<int> members = members_of(ground);
    std::sort(members.begin(), members.end());
    std::vector<Rational> totals(v.player_count(), Rational(0));
    long orders = 0;
    do {
        CoalitionSet seen = 0;
        for (int player : members) {
            totals[player] += v[seen | singleton(player)] - v[seen];
            seen |= singleton(player);
        }
        ++orders;
    } while (std::next_permutation(members.begin(), members.end()));
    for (Rational& t : totals)
        t /= Rational(orders);
    return totals;
}

// GM decomposition by its closed form: thresholds are the sorted distinct
// positive values of v; component k is the indicator of v(T) exceeding the
// (k-1)-th threshold and its coefficient the threshold gap.
inline Decomposition decompose_by_thresholds(const ValuationTable& v) {
    std::vector<Rational> thresholds;
    for (CoalitionSet s = 0; s < v.size(); ++s)
        if (!v[s].is_zero() &&
            std::find(thresholds.begin(), thresholds.end(), v[s]) == thresholds.end())
            thresholds.push_back(v[s]);
    std::sort(thresholds.begin(), thresholds.end());

    Decomposition d;
    Rational previous(0);
    for (const Rational& level : thresholds) {
        std::vector<Rational> indicator(v.size(), Rational(0));
        for (CoalitionSet s = 0; s < v.size(); ++s)
            if (v[s] > previous)
                indicator[s] = Rational(1);
        d.components.push_back({level - previous, ValuationTable(v.player_count(), std::move(indicator))});
        previous = level;
    }
    return d;
}

} // namespace coopshare::oracle
