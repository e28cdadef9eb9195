#pragma once

#include <stdexcept>
#include <string>

namespace thetacalc {

/// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad labels, mismatched ranks, parse failures.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant the computation relies on was violated.
/// `invariant()` names it, e.g. "hard Lefschetz monotonicity".
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string invariant, const std::string& what)
      : Error(invariant + ": " + what), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

class GroupMismatch : public InputError {
 public:
  using InputError::InputError;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class NonInvariantCharacter : public InvariantViolation {
 public:
  explicit NonInvariantCharacter(const std::string& what)
      : InvariantViolation("Weyl invariance", what) {}
};

class NegativePeel : public InvariantViolation {
 public:
  explicit NegativePeel(const std::string& what)
      : InvariantViolation("hard Lefschetz monotonicity", what) {}
};

class Asymmetric : public InvariantViolation {
 public:
  explicit Asymmetric(const std::string& what)
      : InvariantViolation("degree symmetry", what) {}
};

class InconsistentPeel : public InvariantViolation {
 public:
  explicit InconsistentPeel(const std::string& what)
      : InvariantViolation("constant-shift peeling", what) {}
};

class NegativeResult : public InvariantViolation {
 public:
  explicit NegativeResult(const std::string& what)
      : InvariantViolation("effectivity", what) {}
};

class NotNilpotent : public InvariantViolation {
 public:
  explicit NotNilpotent(const std::string& what)
      : InvariantViolation("nilpotency", what) {}
};

}  // namespace thetacalc
