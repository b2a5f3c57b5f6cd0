#include "coopshare/coalition.hpp"

#include <cstdlib>
#include <string>

namespace coopshare {

// COOPSHARE_NMAX caps every n!-enumerating checker. Read once; values outside
// 1..kMaxPlayers fall back to the default.
int enumeration_cap() {
    static const int cap = [] {
        if (const char* env = std::getenv("COOPSHARE_NMAX")) {
            const int v = std::atoi(env);
            if (v >= 1 && v <= kMaxPlayers)
                return v;
        }
        return kDefaultEnumerationCap;
    }();
    return cap;
}

} // namespace coopshare
