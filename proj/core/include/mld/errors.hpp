#pragma once

#include <stdexcept>
#include <string>

namespace mld {

/// Malformed or mathematically invalid input (rank mismatch, non-pointed
/// cone, infeasible tuple, ...). The command-line tool maps this to exit 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A polytope passed to the enumerator has no finite coordinate bounds.
class UnboundedError : public InputError {
 public:
  using InputError::InputError;
};

/// A configured resource guard tripped (subset explosion, search radius).
/// The command-line tool maps this to exit 3.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mld
