#pragma once

#include <stdexcept>
#include <string>

namespace tropgeo {

// Error taxonomy mirrored by the CLI exit codes:
// parse errors -> 1, precondition violations -> 2, internal invariant breaches -> 3.

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

// Matrix with a negative-length tropical cycle has no Kleene star.
class NegativeCycleError : public PreconditionError {
 public:
  explicit NegativeCycleError(const std::string& what) : PreconditionError(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InvariantError(what);
}

}  // namespace tropgeo
