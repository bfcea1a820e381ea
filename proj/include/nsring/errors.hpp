#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace nsring {

// Process exit code the CLI maps an error to: 2 for malformed or
// out-of-contract input, 3 for inputs that exceed a resource guard.
enum class ErrorCode : int {
  bad_input = 2,
  resource_limit = 3,
};

class Error : public std::runtime_error {
 public:
  Error(std::string message, ErrorCode code)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Empty generator list.
struct EmptyInput final : Error {
  explicit EmptyInput(std::string message)
      : Error(std::move(message), ErrorCode::bad_input) {}
};

// gcd of the generators is not 1, so they do not define a numerical
// semigroup (the complement would be infinite).
struct NotCoprime final : Error {
  explicit NotCoprime(std::string message)
      : Error(std::move(message), ErrorCode::bad_input) {}
};

// Operation undefined for the full semigroup N (frobenius -1, no gaps).
struct TrivialSemigroup final : Error {
  explicit TrivialSemigroup(std::string message)
      : Error(std::move(message), ErrorCode::bad_input) {}
};

// Two relative ideals were combined but live over different semigroups.
struct AmbientMismatch final : Error {
  explicit AmbientMismatch(std::string message)
      : Error(std::move(message), ErrorCode::bad_input) {}
};

// Operation undefined for symmetric semigroups (type 1).
struct SymmetricInput final : Error {
  explicit SymmetricInput(std::string message)
      : Error(std::move(message), ErrorCode::bad_input) {}
};

// Family or constructor parameters outside the documented domain.
struct ParameterViolation final : Error {
  explicit ParameterViolation(std::string message)
      : Error(std::move(message), ErrorCode::bad_input) {}
};

// Input admissible in principle but beyond the configured size guards.
struct ResourceLimit final : Error {
  explicit ResourceLimit(std::string message)
      : Error(std::move(message), ErrorCode::resource_limit) {}
};

// Exponent arithmetic left the range of int64_t.
struct Overflow final : Error {
  explicit Overflow(std::string message)
      : Error(std::move(message), ErrorCode::bad_input) {}
};

}  // namespace nsring
