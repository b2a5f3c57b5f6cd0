#include "coopshare/fixtures.hpp"

#include <initializer_list>
#include <utility>

namespace coopshare::fixtures {

namespace {

// Entries are (1-indexed member list, value); unlisted coalitions are 0.
Game make(int n, std::vector<int> order,
          std::initializer_list<std::pair<std::vector<int>, Rational>> entries) {
    std::vector<Rational> values(std::size_t{1} << n, Rational(0));
    for (const auto& [members, value] : entries) {
        CoalitionSet s = 0;
        for (int m : members)
            s |= singleton(m - 1);
        values[s] = value;
    }
    for (int& p : order)
        --p;
    return Game(ValuationTable(n, std::move(values)), ArrivalOrder(std::move(order)));
}

} // namespace

Game g_ex1() {
    return make(4, {1, 2, 3, 4},
                {{{1, 3}, 1},
                 {{2, 3}, 1},
                 {{3, 4}, 3},
                 {{1, 2, 3}, 2},
                 {{1, 3, 4}, 3},
                 {{2, 3, 4}, 3},
                 {{1, 2, 3, 4}, 3}});
}

Game g_ex1_prime() {
    return g_ex1().with_order(ArrivalOrder({0, 1, 3, 2}));
}

Game g_2p() {
    return make(2, {1, 2}, {{{1, 2}, 1}});
}

Game g_3p() {
    return make(3, {1, 2, 3}, {{{1, 2, 3}, 1}});
}

Game g_app() {
    return make(2, {1, 2}, {{{1}, 1}, {{2}, 2}, {{1, 2}, 5}});
}

Game g_irimp() {
    return make(2, {1, 2}, {{{1}, 2}, {{2}, 3}, {{1, 2}, 4}});
}

Game g_intro() {
    return make(3, {1, 2, 3},
                {{{1}, 1}, {{2}, 1}, {{3}, 1},
                 {{1, 2}, 3}, {{1, 3}, 3}, {{2, 3}, 3},
                 {{1, 2, 3}, 5}});
}

Game g_eax() {
    // x = 1, y = 2; the two free pair values below x are pinned to 0.
    return make(4, {1, 2, 3, 4},
                {{{1, 2, 3}, 1},
                 {{3, 4}, 2},
                 {{1, 3, 4}, 2},
                 {{2, 3, 4}, 2},
                 {{1, 2, 3, 4}, 2}});
}

const std::vector<NamedGame>& all() {
    static const std::vector<NamedGame> games = {
        {"g_ex1", g_ex1()},       {"g_ex1_prime", g_ex1_prime()}, {"g_2p", g_2p()},
        {"g_3p", g_3p()},         {"g_app", g_app()},             {"g_irimp", g_irimp()},
        {"g_intro", g_intro()},   {"g_eax", g_eax()},
    };
    return games;
}

} // namespace coopshare::fixtures
