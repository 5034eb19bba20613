#pragma once

#include <stdexcept>
#include <string>

namespace relemb {

// Malformed input: out-of-range ids, circuits that do not decompose the
// digraph, unbalanced vertices, corrupted rotations.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A stated mathematical hypothesis does not hold (density bound, Division
// Lemma preconditions, degeneracy edge count, ...).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The reducer exceeded its iteration guard or hit a dead end in strict mode.
class NoProgressError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A postcondition that the construction guarantees was violated. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace relemb
