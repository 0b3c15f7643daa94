#pragma once

#include <stdexcept>

namespace nchensel {

/// Caller broke a documented precondition (bad shapes, non-monic input,
/// mismatched residues, unverified hypothesis flags).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A containment claimed by the lifting argument failed at runtime. Either
/// the instance lies outside the theorem's hypotheses or there is a bug.
class ContainmentFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search or series hit its configured cap without an answer. This is
/// never evidence of a negative result.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nchensel
