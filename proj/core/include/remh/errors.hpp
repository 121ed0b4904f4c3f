#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace remh {

// Base class of every error this library raises on bad input or exhausted
// resources.  Internal invariant violations throw std::logic_error instead.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual graph input.  `offset` is the byte position within the
// input where parsing failed.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

// An input violates a documented structural precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// The input graph is not a tree where one is required.
class NotATreeError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

// A pattern graph is not a star forest; `component` lists the vertices of
// one offending component.
class NotStarForestError : public PreconditionError {
public:
  NotStarForestError(const std::string& what, std::vector<int> component)
      : PreconditionError(what), component(std::move(component)) {}
  std::vector<int> component;
};

// The requested quantity does not exist: no amount of edge deletions can
// make the host avoid the pattern (an edgeless pattern fitting the host).
class InfeasibleError : public Error {
public:
  using Error::Error;
};

// A configured node/candidate ceiling was reached before the computation
// finished.  `limit` is the ceiling that was hit.
class ResourceLimitError : public Error {
public:
  ResourceLimitError(const std::string& what, std::uint64_t limit)
      : Error(what + " (ceiling " + std::to_string(limit) + ")"),
        limit(limit) {}
  std::uint64_t limit;
};

// Always-on invariant check (survives NDEBUG); reserved for identities
// that certify results, e.g. matching/factor bookkeeping.
[[noreturn]] void fail_invariant(const char* expr, const char* file, int line);

#define REMH_ENSURE(expr)                                        \
  do {                                                           \
    if (!(expr)) ::remh::fail_invariant(#expr, __FILE__, __LINE__); \
  } while (0)

}  // namespace remh
