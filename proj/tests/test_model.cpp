#include "coopshare/errors.hpp"
#include "coopshare/fixtures.hpp"
#include "coopshare/gen.hpp"
#include "coopshare/io.hpp"

#include "oracles.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <fstream>
#include <functional>
#include <sstream>

using namespace coopshare;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(COOPSHARE_FIXTURE_DIR) + "/" + name + ".json";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CoalitionSet mask(std::initializer_list<int> players_1_indexed) {
    CoalitionSet s = 0;
    for (int p : players_1_indexed)
        s |= singleton(p - 1);
    return s;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InternalError;
}

} // namespace

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK((Rational(7, 6) - Rational(3, 2)).str() == "-1/3");
    CHECK((Rational(2, 3) * Rational(9, 4)).str() == "3/2");
    CHECK((Rational(5) / Rational(10)).str() == "1/2");
    CHECK(Rational(7, 6) < Rational(3, 2));
    CHECK(Rational(1, 3) == Rational::parse("2/6"));
    CHECK(Rational::parse("-4/6").str() == "-2/3");

    // arbitrary precision survives round trips
    const std::string big = "123456789012345678901234567891/2";
    CHECK(Rational::parse(big).str() == big);
    CHECK((Rational::parse(big) * Rational(2)).str() == "123456789012345678901234567891");
}

TEST_CASE("rational parse rejects junk") {
    for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1 /2", "2/ 3", "--1"})
        CHECK_THROWS_AS((void)Rational::parse(bad), Error);
}

TEST_CASE("load_game accepts the appendix fixture") {
    const Game g = load_game(read_file(fixture_path("g_app")));
    CHECK(g.player_count() == 2);
    CHECK(g.valuation()[mask({1, 2})] == Rational(5));
    CHECK(g.valuation()[mask({1})] == Rational(1));
    CHECK(g.order().sequence() == std::vector<int>{0, 1});
}

TEST_CASE("load_game round-trips every fixture") {
    for (const auto& named : fixtures::all()) {
        const Game loaded = load_game(read_file(fixture_path(named.name)));
        CHECK(loaded.valuation() == named.game.valuation());
        CHECK(loaded.order() == named.game.order());
        const Game again = load_game(save_game(named.game));
        CHECK(again.valuation() == named.game.valuation());
        CHECK(again.order() == named.game.order());
    }
}

TEST_CASE("load_game rejects malformed documents") {
    const std::string ok = R"({"n":2,"order":[1,2],"valuation":{"":0,"1":0,"2":0,"1,2":1}})";
    CHECK_NOTHROW((void)load_game(ok));

    auto expect = [&](const std::string& doc, ErrorCode want) {
        CHECK(code_of([&] { (void)load_game(doc); }) == want);
    };

    expect(R"({"n":2,"order":[1,2],"valuation":{"":1,"1":1,"2":1,"1,2":1}})",
           ErrorCode::NotNormalized);
    expect(R"({"n":2,"order":[1,2],"valuation":{"":0,"1":0,"2":0}})", ErrorCode::MissingCoalition);
    expect(R"({"n":2,"order":[1,2],"valuation":{"":0,"1":2,"2":0,"1,2":1}})",
           ErrorCode::NotMonotone);
    expect(R"({"n":2,"order":[1,1],"valuation":{"":0,"1":0,"2":0,"1,2":1}})",
           ErrorCode::BadPermutation);
    expect(R"({"n":2,"order":[1],"valuation":{"":0,"1":0,"2":0,"1,2":1}})",
           ErrorCode::BadPermutation);
    expect(R"({"n":2,"order":[1,2],"valuation":{"":0,"1":"-1","2":0,"1,2":1}})",
           ErrorCode::NegativeValue);
    expect(R"({"n":2,"order":[1,2],"valuation":{"":0,"1":0,"2":0,"2,1":1}})",
           ErrorCode::ParseError); // non-canonical key order
    expect(R"({"n":2,"order":[1,2],"valuation":{"":0,"1":0,"2":0,"1,1":1}})",
           ErrorCode::ParseError); // duplicate member
    expect(R"({"n":2,"order":[1,2],"valuation":{"":0,"1":0,"2":0,"1,2":1,"3":0}})",
           ErrorCode::ParseError); // player outside 1..n
    expect(R"({"n":2,"order":[1,2],"valuation":{"":0,"1":0.5,"2":0,"1,2":1}})",
           ErrorCode::ParseError); // floats are never exact
    expect(R"({"n":2,"order":[1,2],"extra":1,"valuation":{"":0,"1":0,"2":0,"1,2":1}})",
           ErrorCode::ParseError); // unknown document key
    expect(R"({"n":0,"order":[],"valuation":{}})", ErrorCode::ParseError);
    expect("not json", ErrorCode::ParseError);
}

TEST_CASE("load_game flags the missing-coalition example from the docs") {
    // g_ex1 without the {2,4} entry
    nlohmann::json doc = game_to_json(fixtures::g_ex1());
    doc["valuation"].erase("2,4");
    CHECK(code_of([&] { (void)load_game(doc.dump()); }) == ErrorCode::MissingCoalition);
}

TEST_CASE("marginal contribution") {
    const auto& ex1 = fixtures::g_ex1().valuation();
    CHECK(marginal_contribution(ex1, mask({1, 2}), 2) == Rational(2)); // player 3 joins {1,2}
    CHECK(marginal_contribution(ex1, 0, 2) == ex1[mask({3})]);
    const auto& app = fixtures::g_app().valuation();
    CHECK(marginal_contribution(app, mask({1}), 1) == Rational(4));
    CHECK(code_of([&] { (void)marginal_contribution(app, mask({1}), 0); }) ==
          ErrorCode::PlayerInCoalition);
}

TEST_CASE("prefix subgame") {
    const Game ex1 = fixtures::g_ex1();
    const Game two = prefix_subgame(ex1, 2);
    CHECK(two.player_count() == 2);
    CHECK(two.labels() == std::vector<int>{1, 2});
    for (CoalitionSet s = 0; s < two.valuation().size(); ++s)
        CHECK(two.valuation()[s] == Rational(0));

    const Game full = prefix_subgame(ex1, 4);
    CHECK(full.valuation() == ex1.valuation());

    const Game solo = prefix_subgame(fixtures::g_app(), 1);
    CHECK(solo.player_count() == 1);
    CHECK(solo.valuation()[1] == Rational(1));

    CHECK(code_of([&] { (void)prefix_subgame(ex1, 5); }) == ErrorCode::StepOutOfRange);
    CHECK(code_of([&] { (void)prefix_subgame(ex1, 0); }) == ErrorCode::StepOutOfRange);

    // original identities survive through a shuffled order
    const Game shuffled = ex1.with_order(ArrivalOrder({2, 0, 3, 1}));
    const Game sub = prefix_subgame(shuffled, 2); // players {1,3} keep labels 1 and 3
    CHECK(sub.labels() == std::vector<int>{1, 3});
    CHECK(sub.valuation()[full_set(2)] == ex1.valuation()[mask({1, 3})]);
}

TEST_CASE("classify_valuation matches the stated flags") {
    const ValuationClass g3p = classify_valuation(fixtures::g_3p().valuation());
    CHECK(g3p.simple);
    CHECK(g3p.superadditive);
    CHECK_FALSE(g3p.subadditive);
    CHECK_FALSE(g3p.submodular);

    // additive |S| is in every class except simple
    std::vector<Rational> additive(8);
    for (CoalitionSet s = 0; s < 8; ++s)
        additive[s] = Rational(set_size(s));
    const ValuationClass add = classify_valuation(ValuationTable(3, additive));
    CHECK(add.submodular);
    CHECK(add.subadditive);
    CHECK(add.superadditive);
    CHECK_FALSE(add.simple);

    const ValuationClass app = classify_valuation(fixtures::g_app().valuation());
    CHECK(app.superadditive);
    CHECK_FALSE(app.simple);

    // g_ex1 is superadditive but not submodular (the DMC early-arrival
    // counterexample relies on this)
    const ValuationClass ex1 = classify_valuation(fixtures::g_ex1().valuation());
    CHECK(ex1.superadditive);
    CHECK_FALSE(ex1.submodular);
}

TEST_CASE("dummy detection") {
    const auto& v = fixtures::g_3p().valuation();
    CHECK_FALSE(is_dummy(v, full_set(3), 0));
    CHECK(is_dummy(v, mask({1, 2}), 0));
    CHECK(is_dummy(v, mask({1}), 0));
    CHECK(code_of([&] { (void)is_dummy(v, mask({1, 2}), 2); }) == ErrorCode::PlayerNotInGround);
    CHECK(dummy_players(v, mask({1, 2})) == mask({1, 2}));
    CHECK(dummy_players(v, full_set(3)) == 0u);
}

TEST_CASE("subadditive dummy fast path agrees with the definition") {
    for (int seed = 0; seed < 250; ++seed) {
        const GenSpec spec{2 + seed % 4, GameClass::Subadditive, static_cast<std::uint64_t>(seed),
                           4};
        const ValuationTable v = generate_table(spec);
        for (int p = 0; p < v.player_count(); ++p)
            CHECK(is_dummy_subadditive(v, p) == is_dummy(v, v.ground_set(), p));
    }
}

TEST_CASE("contributional players and pivotal player") {
    const Game g3p = fixtures::g_3p();
    CHECK(is_contributional(g3p, 3));
    CHECK_FALSE(is_contributional(g3p, 1));
    CHECK(is_contributional(fixtures::g_ex1(), 3));

    CHECK(pivotal_player(g3p) == 2);              // player 3
    CHECK(pivotal_player(fixtures::g_2p()) == 1); // player 2

    // SOCG whose first arriver already wins
    std::vector<Rational> dict(4, Rational(1));
    dict[0] = Rational(0);
    dict[mask({2})] = Rational(0);
    const Game dictator(ValuationTable(2, dict), ArrivalOrder({0, 1}));
    CHECK(pivotal_player(dictator) == 0);

    CHECK(code_of([&] { (void)pivotal_player(fixtures::g_app()); }) == ErrorCode::NotSimpleGame);
}

TEST_CASE("shapley values on the fixtures") {
    const auto app = shapley_values(fixtures::g_app().valuation());
    CHECK(app[0] == Rational(2));
    CHECK(app[1] == Rational(3));

    const auto intro = shapley_values(fixtures::g_intro().valuation());
    for (const auto& s : intro)
        CHECK(s == Rational(5, 3));

    // a global dummy gets exactly zero
    std::vector<Rational> with_dummy(8, Rational(0));
    for (CoalitionSet s = 1; s < 8; ++s)
        with_dummy[s] = contains(s, 0) ? Rational(1) : Rational(0);
    const auto sv = shapley_values(ValuationTable(3, with_dummy));
    CHECK(sv[1] == Rational(0));
    CHECK(sv[2] == Rational(0));
    CHECK(sv[0] == Rational(1));
}

TEST_CASE("shapley matches the permutation-enumeration oracle bit for bit") {
    for (int seed = 0; seed < 40; ++seed) {
        const GenSpec spec{2 + seed % 4, GameClass::Monotone,
                           900 + static_cast<std::uint64_t>(seed), 3};
        const ValuationTable v = generate_table(spec);
        const auto fast = shapley_values(v);
        const auto slow = oracle::shapley_by_enumeration(v, v.ground_set());
        CHECK(fast == slow);

        // efficiency: shares sum to v(N) exactly
        Rational sum(0);
        for (const auto& x : fast)
            sum += x;
        CHECK(sum == v[v.ground_set()]);

        // prefix grounds agree too
        const CoalitionSet ground = v.ground_set() & ~singleton(seed % v.player_count());
        if (ground != 0)
            CHECK(shapley_values_on(v, ground) == oracle::shapley_by_enumeration(v, ground));
    }
}

TEST_CASE("restrict_to compacts tables faithfully") {
    const auto& v = fixtures::g_ex1().valuation();
    const ValuationTable r = restrict_to(v, mask({1, 3, 4}));
    CHECK(r.player_count() == 3);
    CHECK(r[full_set(3)] == v[mask({1, 3, 4})]);
    CHECK(r[mask({1, 2})] == v[mask({1, 3})]); // members re-index to 1,2,3
}
