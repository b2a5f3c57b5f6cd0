#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace coopshare {

/// Coalitions are bitmasks: bit p set <=> player p (0-indexed) is a member.
/// Player counts are capped at kMaxPlayers so a mask fits in 32 bits.
using CoalitionSet = std::uint32_t;

inline constexpr int kMaxPlayers = 16;

/// Players at or above this count make n!-enumerating checkers refuse to run
/// (overridable via the COOPSHARE_NMAX environment variable, see limits.cpp).
inline constexpr int kDefaultEnumerationCap = 6;

int enumeration_cap();

inline CoalitionSet full_set(int n) { return (CoalitionSet{1} << n) - 1; }
inline CoalitionSet singleton(int player) { return CoalitionSet{1} << player; }
inline bool contains(CoalitionSet s, int player) { return (s >> player) & 1u; }
inline int set_size(CoalitionSet s) { return std::popcount(s); }

inline std::vector<int> members_of(CoalitionSet s) {
    std::vector<int> out;
    for (int p = 0; s != 0; ++p, s >>= 1)
        if (s & 1u)
            out.push_back(p);
    return out;
}

/// Renders a coalition in the document key format: 1-indexed members,
/// ascending, comma-separated; the empty set is "".
std::string coalition_key(CoalitionSet s);

/// Iterates all submasks of `set` (including 0 and `set` itself).
/// Usage: for (SubsetRange r(set); !r.done(); r.next()) use r.current();
class SubsetRange {
public:
    explicit SubsetRange(CoalitionSet set) : set_(set), cur_(set), done_(false) {}
    bool done() const { return done_; }
    CoalitionSet current() const { return cur_; }
    void next() {
        if (cur_ == 0)
            done_ = true;
        else
            cur_ = (cur_ - 1) & set_;
    }

private:
    CoalitionSet set_;
    CoalitionSet cur_;
    bool done_;
};

} // namespace coopshare
