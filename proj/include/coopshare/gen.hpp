#pragma once

#include "coopshare/game.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coopshare {

enum class GameClass { Monotone, Submodular, Subadditive, Superadditive, Simple };

const char* game_class_name(GameClass c);
std::optional<GameClass> parse_game_class(const std::string& name);

/// Seeded generator request. `value_grid` bounds the denominators of sampled
/// rationals, which keeps the arithmetic small under order enumeration.
/// Identical specs yield identical outputs, bit for bit.
struct GenSpec {
    int n = 3;
    GameClass cls = GameClass::Monotone;
    std::uint64_t seed = 0;
    int value_grid = 4;
};

/// Class membership is guaranteed by construction and then re-checked with
/// classify_valuation; a construction bug surfaces as Error{InternalError}
/// rather than a quietly mislabeled pool.
ValuationTable generate_table(const GenSpec& spec);

/// Table plus a seeded arrival order drawn from the same stream.
Game generate_game(const GenSpec& spec);

/// Every simple valuation on n players (monotone 0-1, v({})=0, v(N)=1),
/// by brute enumeration; feasible for n <= 4 and the backbone of the
/// "exhaustive at small n" tiers.
std::vector<ValuationTable> enumerate_simple_tables(int n);

} // namespace coopshare
