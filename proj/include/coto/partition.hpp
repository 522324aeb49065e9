#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace coto {

/// Two-group split of a factor list. product_a * product_b equals the
/// product of all inputs.
struct SplitResult {
  std::vector<std::size_t> group_a;
  std::vector<std::size_t> group_b;
  std::uint64_t product_a = 1;
  std::uint64_t product_b = 1;
  bool exact = true;  // false when the greedy fallback was used

  std::uint64_t larger() const { return product_a > product_b ? product_a : product_b; }
};

/// Lists up to this size are split by exhaustive subset enumeration.
inline constexpr std::size_t kExactSplitMaxItems = 24;

/// Splits values (each <= t) into two groups whose products are both at most
/// sqrt(n * t), n being the product of all values.
///
/// With at most kExactSplitMaxItems values the split minimizing the larger
/// product is returned. Ties go to the split whose group_a membership vector
/// is lexicographically greatest, so lower indices land in group_a first.
/// Longer lists use a greedy assignment followed by single-element moves
/// until no move lowers the larger product; that local optimum already
/// satisfies the bound.
///
/// Throws DomainError on an empty list, PreconditionError when a value is 0
/// or exceeds t, ArithmeticError when the total product overflows.
SplitResult balanced_split(std::span<const std::uint64_t> values, std::uint64_t t);

/// max(product_a, product_b)^2 <= n * t, evaluated in 128-bit integers.
bool within_split_bound(const SplitResult& split, std::uint64_t t);

}  // namespace coto
