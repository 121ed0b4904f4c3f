#include "remh/errors.hpp"

namespace remh {

void fail_invariant(const char* expr, const char* file, int line) {
  throw std::logic_error(std::string("invariant violated: ") + expr + " at " +
                         file + ":" + std::to_string(line));
}

}  // namespace remh
