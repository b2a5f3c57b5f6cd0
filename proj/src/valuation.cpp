#include "coopshare/valuation.hpp"

#include "coopshare/errors.hpp"

#include <array>
#include <sstream>

namespace coopshare {

namespace {

std::string describe(CoalitionSet s) {
    return "{" + coalition_key(s) + "}";
}

} // namespace

std::string coalition_key(CoalitionSet s) {
    std::string out;
    for (int p : members_of(s)) {
        if (!out.empty())
            out += ',';
        out += std::to_string(p + 1);
    }
    return out;
}

ValuationTable::ValuationTable(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
    if (n < 1 || n > kMaxPlayers)
        throw Error(ErrorCode::ParseError,
                    "player count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxPlayers));
    if (values_.size() != (std::size_t{1} << n))
        throw Error(ErrorCode::InternalError, "valuation table must hold exactly 2^n entries");
}

const Rational& ValuationTable::at(CoalitionSet s) const {
    if (s >= values_.size())
        throw Error(ErrorCode::InternalError, "coalition " + describe(s) + " outside ground set");
    return values_[s];
}

void ValuationTable::validate() const {
    if (!values_[0].is_zero())
        throw Error(ErrorCode::NotNormalized, "v({}) = " + values_[0].str() + ", expected 0");
    const CoalitionSet all = ground_set();
    for (CoalitionSet s = 0; s <= all; ++s) {
        if (values_[s].is_negative())
            throw Error(ErrorCode::NegativeValue, "v(" + describe(s) + ") = " + values_[s].str());
        for (int p : members_of(s)) {
            const CoalitionSet sub = s & ~singleton(p);
            if (values_[sub] > values_[s])
                throw Error(ErrorCode::NotMonotone,
                            "v(" + describe(sub) + ") = " + values_[sub].str() + " > v(" + describe(s) +
                                ") = " + values_[s].str());
        }
    }
}

Rational marginal_contribution(const ValuationTable& v, CoalitionSet s, int player) {
    if (contains(s, player))
        throw Error(ErrorCode::PlayerInCoalition,
                    "player " + std::to_string(player + 1) + " already in " + describe(s));
    return v[s | singleton(player)] - v[s];
}

ValuationClass classify_valuation(const ValuationTable& v) {
    const int n = v.player_count();
    const CoalitionSet all = full_set(n);

    ValuationClass c;
    c.simple = v[all] == Rational(1);
    for (CoalitionSet s = 0; c.simple && s <= all; ++s)
        c.simple = v[s].is_zero() || v[s] == Rational(1);

    // Disjoint pairs: enumerate S, then subsets of the complement.
    c.subadditive = true;
    c.superadditive = true;
    for (CoalitionSet s = 0; s <= all && (c.subadditive || c.superadditive); ++s) {
        const CoalitionSet rest = all & ~s;
        for (SubsetRange r(rest); !r.done(); r.next()) {
            const CoalitionSet t = r.current();
            const Rational lhs = v[s] + v[t];
            const Rational& rhs = v[s | t];
            if (lhs < rhs)
                c.subadditive = false;
            if (lhs > rhs)
                c.superadditive = false;
            if (!c.subadditive && !c.superadditive)
                break;
        }
    }

    // Submodularity via pairwise marginals: for every S and distinct x,y
    // outside S, v(S+x) + v(S+y) >= v(S+x+y) + v(S). Equivalent to the
    // all-pairs inequality.
    c.submodular = true;
    for (CoalitionSet s = 0; c.submodular && s <= all; ++s) {
        for (int x = 0; x < n && c.submodular; ++x) {
            if (contains(s, x))
                continue;
            for (int y = x + 1; y < n; ++y) {
                if (contains(s, y))
                    continue;
                if (v[s | singleton(x)] + v[s | singleton(y)] < v[s | singleton(x) | singleton(y)] + v[s]) {
                    c.submodular = false;
                    break;
                }
            }
        }
    }
    return c;
}

std::optional<std::pair<CoalitionSet, CoalitionSet>>
find_superadditivity_violation(const ValuationTable& v) {
    const CoalitionSet all = v.ground_set();
    for (CoalitionSet s = 0; s <= all; ++s) {
        const CoalitionSet rest = all & ~s;
        for (SubsetRange r(rest); !r.done(); r.next()) {
            const CoalitionSet t = r.current();
            if (v[s] + v[t] > v[s | t])
                return std::make_pair(s, t);
        }
    }
    return std::nullopt;
}

bool is_dummy(const ValuationTable& v, CoalitionSet ground, int player) {
    if (!contains(ground, player))
        throw Error(ErrorCode::PlayerNotInGround,
                    "player " + std::to_string(player + 1) + " not in ground " + describe(ground));
    const CoalitionSet rest = ground & ~singleton(player);
    for (SubsetRange r(rest); !r.done(); r.next()) {
        const CoalitionSet s = r.current();
        if (v[s | singleton(player)] != v[s])
            return false;
    }
    return true;
}

bool is_dummy_subadditive(const ValuationTable& v, int player) {
    return v[singleton(player)].is_zero();
}

CoalitionSet dummy_players(const ValuationTable& v, CoalitionSet ground) {
    CoalitionSet dummies = 0;
    for (int p : members_of(ground))
        if (is_dummy(v, ground, p))
            dummies |= singleton(p);
    return dummies;
}

namespace {

// 16! < 2^63, so order-count weights fit comfortably in long.
constexpr std::array<long, kMaxPlayers + 1> kFactorial = [] {
    std::array<long, kMaxPlayers + 1> f{};
    f[0] = 1;
    for (int i = 1; i <= kMaxPlayers; ++i)
        f[i] = f[i - 1] * i;
    return f;
}();

} // namespace

std::vector<Rational> shapley_values_on(const ValuationTable& v, CoalitionSet ground) {
    const int n = v.player_count();
    const int g = set_size(ground);
    std::vector<Rational> sv(n, Rational(0));
    for (int p : members_of(ground)) {
        const CoalitionSet rest = ground & ~singleton(p);
        Rational weighted_sum(0);
        for (SubsetRange r(rest); !r.done(); r.next()) {
            const CoalitionSet s = r.current();
            const long weight = kFactorial[set_size(s)] * kFactorial[g - set_size(s) - 1];
            weighted_sum += Rational(weight) * (v[s | singleton(p)] - v[s]);
        }
        sv[p] = weighted_sum / Rational(kFactorial[g]);
    }
    return sv;
}

ValuationTable restrict_to(const ValuationTable& v, CoalitionSet ground) {
    const std::vector<int> members = members_of(ground);
    const int m = static_cast<int>(members.size());
    std::vector<Rational> values(std::size_t{1} << m);
    for (CoalitionSet t = 0; t < (CoalitionSet{1} << m); ++t) {
        CoalitionSet orig = 0;
        for (int bit = 0; bit < m; ++bit)
            if (contains(t, bit))
                orig |= singleton(members[bit]);
        values[t] = v[orig];
    }
    return ValuationTable(m, std::move(values));
}

} // namespace coopshare
