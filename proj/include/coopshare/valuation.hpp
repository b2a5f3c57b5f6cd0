#pragma once

#include "coopshare/coalition.hpp"
#include "coopshare/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace coopshare {

struct ValuationClass {
    bool submodular = false;
    bool subadditive = false;
    bool superadditive = false;
    bool simple = false;
};

/// Total map from every coalition over n players to a non-negative exact
/// value. Entries are indexed directly by bitmask, so lookups are O(1) and
/// every one of the 2^n coalitions is always present.
class ValuationTable {
public:
    ValuationTable() : n_(0) {}
    ValuationTable(int n, std::vector<Rational> values);

    int player_count() const { return n_; }
    CoalitionSet ground_set() const { return full_set(n_); }

    const Rational& operator[](CoalitionSet s) const { return values_[s]; }
    const Rational& at(CoalitionSet s) const;

    std::size_t size() const { return values_.size(); }

    /// Throws Error{NotNormalized | NegativeValue | NotMonotone} unless the
    /// table is normalized, non-negative and monotone. The monotonicity scan
    /// checks v(S) >= v(S \ {x}) for every S and member x, which covers all
    /// S subset T pairs by transitivity; the reported witness is expanded to
    /// a violating (S strict-subset T) pair.
    void validate() const;

    bool operator==(const ValuationTable& o) const = default;

private:
    int n_;
    std::vector<Rational> values_;
};

/// v(S u {i}) - v(S). Throws Error{PlayerInCoalition} if i is in S.
Rational marginal_contribution(const ValuationTable& v, CoalitionSet s, int player);

/// Exhaustive classification per the standard set-function inequalities:
/// submodular  v(S)+v(T) >= v(S u T)+v(S n T) for all pairs,
/// subadditive v(S)+v(T) >= v(S u T) for disjoint pairs,
/// superadditive v(S)+v(T) <= v(S u T) for disjoint pairs,
/// simple      all values in {0,1} and v(N) = 1.
/// For monotone tables the disjoint-pair forms coincide with the
/// arbitrary-pair ones.
ValuationClass classify_valuation(const ValuationTable& v);

/// First disjoint pair (S, T) with v(S) + v(T) > v(S u T), if any.
std::optional<std::pair<CoalitionSet, CoalitionSet>>
find_superadditivity_violation(const ValuationTable& v);

/// True iff v(S u {j}) = v(S) for every S within `ground` not containing j.
/// Exhaustive over 2^(|ground|-1) subsets. Throws Error{PlayerNotInGround}.
bool is_dummy(const ValuationTable& v, CoalitionSet ground, int player);

/// Prop.-5 fast path, valid only for subadditive tables: j is dummy iff
/// v({j}) = 0.
bool is_dummy_subadditive(const ValuationTable& v, int player);

/// Bitmask of players dummy in the sub-game on `ground`.
CoalitionSet dummy_players(const ValuationTable& v, CoalitionSet ground);

/// Shapley value of the sub-game restricted to `ground`, as a vector indexed
/// by player id (non-members hold 0). Computed by the subset-sum formula:
/// SV(i) = sum over S subset ground\{i} of |S|!(g-|S|-1)!/g! * MC(S, i).
std::vector<Rational> shapley_values_on(const ValuationTable& v, CoalitionSet ground);

inline std::vector<Rational> shapley_values(const ValuationTable& v) {
    return shapley_values_on(v, v.ground_set());
}

/// Compacts v to the sub-game on `ground`: the result has |ground| players,
/// re-indexed in increasing original id. Used by decomposition consistency
/// checks; the rules never materialize restrictions.
ValuationTable restrict_to(const ValuationTable& v, CoalitionSet ground);

} // namespace coopshare
