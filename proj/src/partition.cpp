#include "coto/partition.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "coto/errors.hpp"

namespace coto {
namespace {

using u64 = std::uint64_t;

u64 reverse_bits(u64 mask, std::size_t k) {
  u64 r = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (mask >> i & 1) r |= u64{1} << (k - 1 - i);
  }
  return r;
}

SplitResult from_mask(std::span<const u64> values, u64 mask, u64 total) {
  SplitResult out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (mask >> i & 1) {
      out.group_a.push_back(i);
      out.product_a *= values[i];
    } else {
      out.group_b.push_back(i);
    }
  }
  out.product_b = total / out.product_a;
  return out;
}

SplitResult exact_split(std::span<const u64> values, u64 total) {
  const std::size_t k = values.size();
  const u64 count = u64{1} << k;
  // Gray-code walk: one element changes side per step, so the group_a
  // product is updated with a single exact multiply or divide.
  u64 product_a = 1;
  u64 best_mask = 0;
  u64 best_max = total;
  u64 best_key = 0;
  for (u64 i = 1; i < count; ++i) {
    const u64 gray = i ^ (i >> 1);
    const auto bit = static_cast<std::size_t>(std::countr_zero(i));
    if (gray >> bit & 1) {
      product_a *= values[bit];
    } else {
      product_a /= values[bit];
    }
    const u64 product_b = total / product_a;
    const u64 larger = std::max(product_a, product_b);
    if (larger > best_max) continue;
    const u64 key = reverse_bits(gray, k);
    if (larger < best_max || key > best_key) {
      best_max = larger;
      best_mask = gray;
      best_key = key;
    }
  }
  SplitResult out = from_mask(values, best_mask, total);
  out.exact = true;
  return out;
}

SplitResult greedy_split(std::span<const u64> values, u64 total) {
  const std::size_t k = values.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });

  std::vector<bool> in_a(k, false);
  u64 product_a = 1;
  u64 product_b = 1;
  for (std::size_t idx : order) {
    if (product_a <= product_b) {
      in_a[idx] = true;
      product_a *= values[idx];
    } else {
      product_b *= values[idx];
    }
  }

  // Move single elements from the larger side while that lowers the larger
  // product. At a fixed point every element x on the larger side has
  // x >= larger/smaller, which gives larger^2 <= n * t.
  for (bool improved = true; improved;) {
    improved = false;
    const bool a_larger = product_a >= product_b;
    const u64 larger = a_larger ? product_a : product_b;
    const u64 smaller = a_larger ? product_b : product_a;
    for (std::size_t i = 0; i < k; ++i) {
      if (in_a[i] != a_larger || values[i] == 1) continue;
      const u64 new_larger = larger / values[i];
      const unsigned __int128 new_smaller = static_cast<unsigned __int128>(smaller) * values[i];
      if (new_smaller < larger && new_larger < larger) {
        in_a[i] = !in_a[i];
        if (a_larger) {
          product_a = new_larger;
          product_b = static_cast<u64>(new_smaller);
        } else {
          product_b = new_larger;
          product_a = static_cast<u64>(new_smaller);
        }
        improved = true;
        break;
      }
    }
  }

  SplitResult out;
  for (std::size_t i = 0; i < k; ++i) (in_a[i] ? out.group_a : out.group_b).push_back(i);
  out.product_a = product_a;
  out.product_b = total / product_a;
  out.exact = false;
  return out;
}

}  // namespace

SplitResult balanced_split(std::span<const std::uint64_t> values, std::uint64_t t) {
  if (values.empty()) throw DomainError("balanced_split: empty value list");
  u64 total = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) throw PreconditionError("balanced_split: value at index " + std::to_string(i) + " is 0");
    if (values[i] > t) {
      throw PreconditionError("balanced_split: value " + std::to_string(values[i]) + " exceeds t = " +
                              std::to_string(t));
    }
    total = checked_mul(total, values[i]);
  }
  return values.size() <= kExactSplitMaxItems ? exact_split(values, total) : greedy_split(values, total);
}

bool within_split_bound(const SplitResult& split, std::uint64_t t) {
  using u128 = unsigned __int128;
  const u128 larger = split.larger();
  const u128 n = static_cast<u128>(split.product_a) * split.product_b;
  return larger * larger <= n * t;
}

}  // namespace coto
