#pragma once

#include "coopshare/decomposition.hpp"
#include "coopshare/game.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace coopshare {

/// Parses and validates a game document:
///   {"n": int, "order": [1-indexed], "valuation": {"1,3": "p/q" | "p" | int}}
/// Keys are comma-joined ascending 1-indexed member lists, "" for the empty
/// set. Parsing is strict: unknown or non-canonical keys, duplicate members,
/// missing coalitions, bad permutations, negative values, v({}) != 0 and
/// monotonicity violations are all errors.
Game load_game(const std::string& bytes);
Game load_game_file(const std::string& path);

nlohmann::json game_to_json(const Game& g);
std::string save_game(const Game& g);

nlohmann::json trajectory_to_json(const std::string& rule, const Game& g,
                                  const AllocationTrajectory& t);
nlohmann::json final_row_to_json(const std::string& rule, const Game& g,
                                 const AllocationTrajectory& t);

nlohmann::json decomposition_to_json(const Decomposition& d);

} // namespace coopshare
