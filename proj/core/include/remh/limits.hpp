#pragma once

#include <cstdint>

namespace remh {

// Default ceiling for search nodes (oracle), enumeration candidates
// (star-forest bounded branch) and generated children (isomorph-free
// generation).  Overridable via the REMH_NODE_CEILING environment
// variable; individual calls can pass their own ceiling instead.
std::uint64_t default_search_ceiling();

}  // namespace remh
