#pragma once

#include <stdexcept>
#include <string>

namespace lpp {

// An operation was called outside its domain (n too large, bounded law where
// an unbounded one is required, infeasible constants, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input: distribution specs, edge lists, weight dumps.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace lpp
