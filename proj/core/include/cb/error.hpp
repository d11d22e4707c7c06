#pragma once

#include <stdexcept>
#include <string>

namespace cb {

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a signed permutation is not in the group an operation needs (e.g. D_n).
class NotInGroup : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an expansion leaves a nonzero residual.
class NotInSpan : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An identity check failed inside an oracle. Never recoverable.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cb
