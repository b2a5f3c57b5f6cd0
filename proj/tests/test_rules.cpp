#include "coopshare/decomposition.hpp"
#include "coopshare/errors.hpp"
#include "coopshare/fixtures.hpp"
#include "coopshare/gen.hpp"

#include <doctest.h>

using namespace coopshare;

namespace {

std::vector<Rational> finals(const AllocationTrajectory& t) {
    return t.final_row();
}

std::vector<Rational> rvec(std::initializer_list<Rational> xs) {
    return {xs};
}

// Online consistency: the first t rows of a full run must equal the run on
// the prefix sub-game, mapped back through the sub-game's labels.
void check_online_consistency(Rule rule, const Game& g) {
    const AllocationTrajectory full = run_rule(rule, g);
    for (int t = 1; t <= g.order().length(); ++t) {
        const Game sub = prefix_subgame(g, t);
        const AllocationTrajectory part = run_rule(rule, sub);
        REQUIRE(part.step_count() == t);
        for (int step = 1; step <= t; ++step) {
            for (int j = 0; j < sub.player_count(); ++j) {
                const int original = sub.labels()[j] - 1;
                CHECK(part.row(step)[j] == full.row(step)[original]);
            }
        }
    }
}

void check_structure(Rule rule, const Game& g) {
    const AllocationTrajectory traj = run_rule(rule, g);
    CHECK(first_inefficient_row(g, traj) == 0);
    for (const auto& row : traj.rows)
        for (const auto& share : row)
            CHECK_FALSE(share.is_negative());
    // not-yet-arrived players hold zero
    for (int t = 1; t <= traj.step_count(); ++t)
        for (int p = 0; p < g.player_count(); ++p)
            if (g.order().position_of(p) > t)
                CHECK(traj.row(t)[p].is_zero());
}

Game seeded_game(GameClass cls, int n, std::uint64_t seed) {
    return generate_game(GenSpec{n, cls, seed, 3});
}

} // namespace

TEST_CASE("dmc trajectories") {
    CHECK(finals(run_dmc(fixtures::g_3p())) == rvec({0, 0, 1}));
    CHECK(finals(run_dmc(fixtures::g_intro())) == rvec({1, 2, 2}));

    std::vector<Rational> solo{Rational(0), Rational(7, 2)};
    const Game single(ValuationTable(1, solo), ArrivalOrder({0}));
    CHECK(finals(run_dmc(single)) == rvec({Rational(7, 2)}));
}

TEST_CASE("sv trajectories recompute shapley per prefix") {
    const AllocationTrajectory t = run_sv(fixtures::g_app());
    CHECK(t.row(1) == rvec({1, 0}));
    CHECK(t.row(2) == rvec({2, 3}));

    CHECK(finals(run_sv(fixtures::g_3p())) ==
          rvec({Rational(1, 3), Rational(1, 3), Rational(1, 3)}));

    const Game ex1 = fixtures::g_ex1();
    CHECK(finals(run_sv(ex1)) == shapley_values(ex1.valuation()));
}

TEST_CASE("rfc rewards the first critical player once") {
    CHECK(finals(run_rfc(fixtures::g_2p())) == rvec({1, 0}));
    CHECK(finals(run_rfc(fixtures::g_3p())) == rvec({1, 0, 0}));

    CHECK_THROWS_AS((void)run_rfc(fixtures::g_app()), Error);

    for (int seed = 0; seed < 60; ++seed) {
        const Game g = seeded_game(GameClass::Simple, 2 + seed % 3, 70 + seed);
        const AllocationTrajectory t = run_rfc(g);
        // exactly one distribution, of the whole unit, at the pivotal step
        int changed_rows = 0;
        for (int step = 1; step <= t.step_count(); ++step) {
            Rational row_sum(0);
            for (const auto& x : t.row(step))
                row_sum += x;
            const Rational prev = [&] {
                Rational s(0);
                if (step > 1)
                    for (const auto& x : t.row(step - 1))
                        s += x;
                return s;
            }();
            if (row_sum != prev) {
                ++changed_rows;
                CHECK(row_sum - prev == Rational(1));
                CHECK(step == g.order().position_of(pivotal_player(g)));
                int recipients = 0;
                for (int p = 0; p < g.player_count(); ++p)
                    if (t.row(step)[p] != (step > 1 ? t.row(step - 1)[p] : Rational(0)))
                        ++recipients;
                CHECK(recipients == 1);
            }
        }
        CHECK(changed_rows == 1);
    }
}

TEST_CASE("mes splits each marginal over all arrivals") {
    CHECK(finals(run_mes(fixtures::g_3p())) ==
          rvec({Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
    CHECK(finals(run_mes(fixtures::g_intro())) ==
          rvec({Rational(8, 3), Rational(5, 3), Rational(2, 3)}));

    std::vector<Rational> zeros(8, Rational(0));
    const Game zg(ValuationTable(3, zeros), ArrivalOrder({0, 1, 2}));
    CHECK(finals(run_mes(zg)) == rvec({0, 0, 0}));
}

TEST_CASE("ndmes excludes dummies and matches mes when none exist") {
    CHECK(finals(run_ndmes(fixtures::g_3p())) ==
          rvec({Rational(1, 3), Rational(1, 3), Rational(1, 3)}));
    CHECK(finals(run_ndmes(fixtures::g_intro())) == finals(run_mes(fixtures::g_intro())));

    // a globally dummy player holds zero in every row
    std::vector<Rational> vals(8, Rational(0));
    for (CoalitionSet s = 1; s < 8; ++s)
        vals[s] = contains(s, 0) ? Rational(2) : Rational(0);
    const Game g(ValuationTable(3, vals), ArrivalOrder({1, 2, 0}));
    const AllocationTrajectory t = run_ndmes(g);
    for (int step = 1; step <= 3; ++step) {
        CHECK(t.row(step)[1].is_zero());
        CHECK(t.row(step)[2].is_zero());
    }
    CHECK(t.final_row()[0] == Rational(2));
}

TEST_CASE("ndmes fast path equals exhaustive detection on subadditive games") {
    for (int seed = 0; seed < 200; ++seed) {
        const Game g = seeded_game(GameClass::Subadditive, 2 + seed % 4, 500 + seed);
        CHECK(run_ndmes(g, nullptr, DummyDetection::Exhaustive).rows ==
              run_ndmes(g, nullptr, DummyDetection::FastPath).rows);
    }
}

TEST_CASE("ulmes sharing sets of the decomposition example") {
    const Game ex1 = fixtures::g_ex1();
    CHECK(ulmes_sharing_set(ex1, 4).members == (singleton(2) | singleton(3)));
    CHECK(ulmes_sharing_set(ex1, 3).members == (singleton(0) | singleton(1) | singleton(2)));
    CHECK(ulmes_sharing_set(ex1, 1).members == singleton(0));

    CHECK_THROWS_AS((void)ulmes_sharing_set(ex1, 0), Error);
    CHECK_THROWS_AS((void)ulmes_sharing_set(ex1, 5), Error);
}

TEST_CASE("ulmes reproduces the worked example under both orders") {
    CHECK(finals(run_ulmes(fixtures::g_ex1())) ==
          rvec({Rational(2, 3), Rational(2, 3), Rational(7, 6), Rational(1, 2)}));
    CHECK(finals(run_ulmes(fixtures::g_ex1_prime())) ==
          rvec({0, 0, Rational(3, 2), Rational(3, 2)}));
}

TEST_CASE("ulmes on the delayed-arrival family at x=1, y=2") {
    const Game g = fixtures::g_eax();
    CHECK(finals(run_ulmes(g))[2] == Rational(5, 6)); // x/3 + (y-x)/2
    const Game delayed = g.with_order(ArrivalOrder({0, 1, 3, 2}));
    CHECK(finals(run_ulmes(delayed))[2] == Rational(1)); // y/2
}

TEST_CASE("ulmes set always reaches the prefix value") {
    for (int seed = 0; seed < 80; ++seed) {
        const GameClass cls = seed % 2 == 0 ? GameClass::Monotone : GameClass::Simple;
        const Game g = seeded_game(cls, 2 + seed % 4, 130 + seed);
        for (int t = 1; t <= g.order().length(); ++t) {
            const SharingSet s = ulmes_sharing_set(g, t);
            CHECK(g.valuation()[s.members] == g.valuation()[g.order().prefix_set(t)]);
            CHECK(contains(s.members, g.order().arriver_at(t)));
        }
    }
}

TEST_CASE("ir refinement of mes on the intro game and additive games") {
    CHECK(finals(ir_refine(Rule::MES, fixtures::g_intro())) ==
          rvec({Rational(11, 6), Rational(11, 6), Rational(4, 3)}));

    // additive valuations leave nothing to share beyond the singletons
    std::vector<Rational> additive(8);
    for (CoalitionSet s = 0; s < 8; ++s)
        additive[s] = Rational(2 * ((s >> 0) & 1) + 3 * ((s >> 1) & 1) + ((s >> 2) & 1));
    const Game add(ValuationTable(3, additive), ArrivalOrder({2, 0, 1}));
    for (Rule base : {Rule::MES, Rule::NDMES}) {
        const auto f = finals(ir_refine(base, add));
        CHECK(f == rvec({2, 3, 1}));
    }

    CHECK_THROWS_AS((void)ir_refine(Rule::MES, fixtures::g_irimp()), Error);
    try {
        (void)ir_refine(Rule::MES, fixtures::g_irimp());
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSuperadditive);
    }
}

TEST_CASE("ir-refined rules clear every singleton on superadditive pools") {
    for (int seed = 0; seed < 120; ++seed) {
        const Game g = seeded_game(GameClass::Superadditive, 2 + seed % 4, 300 + seed);
        for (Rule rule : {Rule::IR_MES, Rule::IR_NDMES}) {
            const auto f = finals(run_rule(rule, g));
            for (int p = 0; p < g.player_count(); ++p)
                CHECK(f[p] >= g.valuation()[singleton(p)]);
        }
    }
}

TEST_CASE("every rule is prefix-efficient, non-negative and online-consistent") {
    const std::vector<Rule> general = {Rule::DMC, Rule::SV,     Rule::MES,
                                       Rule::ULMES, Rule::NDMES, Rule::ERFC, Rule::EULMES};
    for (int seed = 0; seed < 25; ++seed) {
        const Game g = seeded_game(GameClass::Monotone, 2 + seed % 4, 40 + seed);
        for (Rule rule : general) {
            check_structure(rule, g);
            check_online_consistency(rule, g);
        }
    }
    for (int seed = 0; seed < 25; ++seed) {
        const Game g = seeded_game(GameClass::Superadditive, 2 + seed % 4, 40 + seed);
        for (Rule rule : {Rule::IR_MES, Rule::IR_NDMES, Rule::IR_EULMES}) {
            check_structure(rule, g);
            check_online_consistency(rule, g);
        }
    }
    for (int seed = 0; seed < 25; ++seed) {
        const Game g = seeded_game(GameClass::Simple, 2 + seed % 3, 40 + seed);
        check_structure(Rule::RFC, g);
        check_online_consistency(Rule::RFC, g);
    }
}

TEST_CASE("rule names round-trip") {
    for (Rule r : {Rule::DMC, Rule::SV, Rule::RFC, Rule::MES, Rule::NDMES, Rule::ULMES, Rule::ERFC,
                   Rule::EULMES, Rule::IR_MES, Rule::IR_NDMES, Rule::IR_EULMES})
        CHECK(parse_rule(rule_name(r)) == r);
    CHECK_FALSE(parse_rule("frc").has_value());
}
