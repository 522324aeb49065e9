#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coto {

/// Argument outside the mathematical domain of an operation (n = 0, c < 2, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller violated a declared precondition (value above a declared bound, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds a configured memory or range cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integer overflow that would otherwise wrap silently.
class ArithmeticError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw ArithmeticError("overflow: " + std::to_string(x) + " * " + std::to_string(y));
  }
  return r;
}

inline std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw ArithmeticError("overflow: " + std::to_string(x) + " + " + std::to_string(y));
  }
  return r;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  if (base <= 1) return (base == 0 && exp > 0) ? 0 : 1;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace coto
