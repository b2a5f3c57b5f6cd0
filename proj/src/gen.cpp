#include "coopshare/gen.hpp"

#include "coopshare/errors.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace coopshare {

const char* game_class_name(GameClass c) {
    switch (c) {
    case GameClass::Monotone: return "monotone";
    case GameClass::Submodular: return "submodular";
    case GameClass::Subadditive: return "subadditive";
    case GameClass::Superadditive: return "superadditive";
    case GameClass::Simple: return "simple";
    }
    return "?";
}

std::optional<GameClass> parse_game_class(const std::string& name) {
    for (GameClass c : {GameClass::Monotone, GameClass::Submodular, GameClass::Subadditive,
                        GameClass::Superadditive, GameClass::Simple})
        if (name == game_class_name(c))
            return c;
    return std::nullopt;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 make_rng(const GenSpec& spec) {
    std::uint64_t h = splitmix64(spec.seed);
    h = splitmix64(h ^ static_cast<std::uint64_t>(spec.n));
    h = splitmix64(h ^ (static_cast<std::uint64_t>(spec.cls) << 8));
    h = splitmix64(h ^ (static_cast<std::uint64_t>(spec.value_grid) << 16));
    return std::mt19937_64(h);
}

// std::uniform_int_distribution is not bit-reproducible across standard
// library implementations, so bounded draws are rolled by hand.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

Rational random_value(std::mt19937_64& rng, int grid) {
    const long num = static_cast<long>(uniform_below(rng, 4 * static_cast<std::uint64_t>(grid) + 1));
    const long den = 1 + static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(grid)));
    return Rational(num, den);
}

ValuationTable gen_monotone(std::mt19937_64& rng, const GenSpec& spec) {
    const std::size_t size = std::size_t{1} << spec.n;
    std::vector<Rational> values(size, Rational(0));
    for (CoalitionSet s = 1; s < size; ++s)
        values[s] = random_value(rng, spec.value_grid);
    // Monotonize upward: ascending masks visit every one-element-removed
    // submask first, so a single pass suffices.
    for (CoalitionSet s = 1; s < size; ++s)
        for (int p : members_of(s))
            values[s] = std::max(values[s], values[s & ~singleton(p)]);
    return ValuationTable(spec.n, std::move(values));
}

std::vector<long> random_weights(std::mt19937_64& rng, int n) {
    std::vector<long> w(n);
    for (long& wi : w)
        wi = uniform_below(rng, 4) == 0 ? 0 : 1 + static_cast<long>(uniform_below(rng, 3));
    return w;
}

// v(S) = F[sum of integer weights in S] where F is the prefix sum of a slope
// sequence; strictly increasing slopes give a convex F (superadditive game),
// strictly decreasing positive slopes a concave one (subadditive game).
ValuationTable gen_weighted_transform(std::mt19937_64& rng, const GenSpec& spec, bool convex) {
    const std::vector<long> weights = random_weights(rng, spec.n);
    long max_sum = 0;
    for (long w : weights)
        max_sum += w;

    std::vector<Rational> prefix(static_cast<std::size_t>(max_sum) + 1, Rational(0));
    if (max_sum > 0) {
        const int grid = spec.value_grid;
        Rational slope(1 + static_cast<long>(uniform_below(rng, 2 * grid)),
                       1 + static_cast<long>(uniform_below(rng, grid)));
        const Rational floor_slope =
            slope * Rational(1, 2 + static_cast<long>(uniform_below(rng, grid)));
        for (long m = 1; m <= max_sum; ++m) {
            prefix[m] = prefix[m - 1] + slope;
            if (convex) {
                slope += Rational(1 + static_cast<long>(uniform_below(rng, 2 * grid)),
                                  1 + static_cast<long>(uniform_below(rng, grid)));
            } else {
                // Shrink towards a positive floor so slopes stay decreasing
                // without collapsing to zero.
                slope = floor_slope + (slope - floor_slope) * Rational(1, 2);
            }
        }
    }

    const std::size_t size = std::size_t{1} << spec.n;
    std::vector<Rational> values(size, Rational(0));
    for (CoalitionSet s = 1; s < size; ++s) {
        long total = 0;
        for (int p : members_of(s))
            total += weights[p];
        values[s] = prefix[total];
    }
    return ValuationTable(spec.n, std::move(values));
}

ValuationTable gen_submodular(std::mt19937_64& rng, const GenSpec& spec) {
    const int elements = spec.n + static_cast<int>(uniform_below(rng, spec.n + 1));
    std::vector<Rational> weight(elements);
    for (Rational& w : weight)
        w = Rational(static_cast<long>(uniform_below(rng, 3 * spec.value_grid + 1)),
                     1 + static_cast<long>(uniform_below(rng, spec.value_grid)));

    std::vector<std::uint32_t> covers(spec.n, 0);
    for (std::uint32_t& c : covers)
        c = static_cast<std::uint32_t>(uniform_below(rng, std::uint64_t{1} << elements));

    const std::size_t size = std::size_t{1} << spec.n;
    std::vector<Rational> values(size, Rational(0));
    for (CoalitionSet s = 1; s < size; ++s) {
        std::uint32_t covered = 0;
        for (int p : members_of(s))
            covered |= covers[p];
        Rational total(0);
        for (int e = 0; e < elements; ++e)
            if ((covered >> e) & 1u)
                total += weight[e];
        values[s] = total;
    }
    return ValuationTable(spec.n, std::move(values));
}

ValuationTable gen_simple(std::mt19937_64& rng, const GenSpec& spec) {
    const CoalitionSet all = full_set(spec.n);
    const int k = 1 + static_cast<int>(uniform_below(rng, 3));
    std::vector<CoalitionSet> minimal;
    for (int i = 0; i < k; ++i)
        minimal.push_back(1 + static_cast<CoalitionSet>(uniform_below(rng, all)));

    const std::size_t size = std::size_t{1} << spec.n;
    std::vector<Rational> values(size, Rational(0));
    for (CoalitionSet s = 1; s < size; ++s)
        for (CoalitionSet m : minimal)
            if ((s & m) == m) {
                values[s] = Rational(1);
                break;
            }
    return ValuationTable(spec.n, std::move(values));
}

} // namespace

ValuationTable generate_table(const GenSpec& spec) {
    if (spec.n < 1 || spec.n > kMaxPlayers)
        throw Error(ErrorCode::ParseError, "generator n outside 1.." + std::to_string(kMaxPlayers));
    if (spec.value_grid < 1)
        throw Error(ErrorCode::ParseError, "value grid must be >= 1");

    std::mt19937_64 rng = make_rng(spec);
    ValuationTable table;
    switch (spec.cls) {
    case GameClass::Monotone: table = gen_monotone(rng, spec); break;
    case GameClass::Superadditive: table = gen_weighted_transform(rng, spec, true); break;
    case GameClass::Subadditive: table = gen_weighted_transform(rng, spec, false); break;
    case GameClass::Submodular: table = gen_submodular(rng, spec); break;
    case GameClass::Simple: table = gen_simple(rng, spec); break;
    }

    table.validate();
    const ValuationClass c = classify_valuation(table);
    const bool member = spec.cls == GameClass::Monotone ||
                        (spec.cls == GameClass::Submodular && c.submodular) ||
                        (spec.cls == GameClass::Subadditive && c.subadditive) ||
                        (spec.cls == GameClass::Superadditive && c.superadditive) ||
                        (spec.cls == GameClass::Simple && c.simple);
    if (!member)
        throw Error(ErrorCode::InternalError,
                    std::string("generated table failed its class predicate: ") +
                        game_class_name(spec.cls));
    return table;
}

Game generate_game(const GenSpec& spec) {
    ValuationTable table = generate_table(spec);
    GenSpec order_stream = spec;
    order_stream.seed = splitmix64(spec.seed ^ 0x6f72646572ULL); // separate stream for the order
    std::mt19937_64 rng = make_rng(order_stream);
    std::vector<int> order(spec.n);
    for (int i = 0; i < spec.n; ++i)
        order[i] = i;
    for (int i = spec.n - 1; i > 0; --i)
        std::swap(order[i], order[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    return Game(std::move(table), ArrivalOrder(std::move(order)));
}

std::vector<ValuationTable> enumerate_simple_tables(int n) {
    if (n < 1 || n > 4)
        throw Error(ErrorCode::ScopeTooLarge, "simple-table enumeration supported for n <= 4");
    const std::size_t size = std::size_t{1} << n;
    const int free_slots = static_cast<int>(size) - 2; // all coalitions except {} and N
    std::vector<ValuationTable> out;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << free_slots); ++bits) {
        std::vector<Rational> values(size, Rational(0));
        values[size - 1] = Rational(1);
        for (int slot = 0; slot < free_slots; ++slot)
            if ((bits >> slot) & 1u)
                values[slot + 1] = Rational(1);

        bool monotone = true;
        for (CoalitionSet s = 1; s < size && monotone; ++s)
            for (int p : members_of(s))
                if (values[s & ~singleton(p)] > values[s]) {
                    monotone = false;
                    break;
                }
        if (monotone)
            out.emplace_back(n, std::move(values));
    }
    return out;
}

} // namespace coopshare
