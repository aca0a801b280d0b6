#pragma once

#include <stdexcept>
#include <string>

namespace lspsim {

/// Scenario or configuration input rejected before any simulation work runs.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition. This is a bug in the calling
/// code, not bad user input.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The equal-loss bisection could not bracket the target loss within the
/// requested alpha bounds.
class BracketingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Loss versus capacity scale came out non-monotone beyond the noise
/// allowance; the estimate needs more replications.
class MonotonicityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const char* what) {
  if (!ok) throw ContractViolation(what);
}

inline void check_input(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

}  // namespace lspsim
