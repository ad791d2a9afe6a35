#pragma once

#include <stdexcept>
#include <string>

namespace tg {

/// Malformed input: out-of-range indices, non-antichain coalition lists,
/// unparsable files.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on an input outside its domain (for example a
/// bipartite graph whose A side cannot be matched into B).
class PreconditionViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A desk-scale guard (player count, coalition count, k) was exceeded.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tg
