#include "remh/limits.hpp"

#include <cstdlib>
#include <string>

namespace remh {

std::uint64_t default_search_ceiling() {
  if (const char* env = std::getenv("REMH_NODE_CEILING")) {
    try {
      unsigned long long v = std::stoull(env);
      if (v > 0) return v;
    } catch (...) {
      // fall through to the built-in default on unparsable values
    }
  }
  return 50'000'000ull;
}

}  // namespace remh
