#pragma once

#include "coopshare/game.hpp"

#include <string>
#include <vector>

namespace coopshare::fixtures {

/// Worked-example games used across the test and verification suites.
/// g_ex1 is the 4-player decomposition example; g_ex1_prime the same
/// valuation with the third and fourth arrivals swapped. g_2p, g_3p are the
/// small simple games from the participation counterexamples, g_app the
/// 2-player superadditive game (1, 2, 5), g_irimp the individual-rationality
/// impossibility game (2, 3, 4), g_intro the 3-student story (1s, 3s, 5),
/// and g_eax the delayed-arrival family instantiated at x = 1, y = 2.
Game g_ex1();
Game g_ex1_prime();
Game g_2p();
Game g_3p();
Game g_app();
Game g_irimp();
Game g_intro();
Game g_eax();

struct NamedGame {
    std::string name;
    Game game;
};

const std::vector<NamedGame>& all();

} // namespace coopshare::fixtures
