#pragma once

#include "cycloseq/bignat.hpp"
#include "cycloseq/errors.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycloseq {

/// The set of cyclic binary sequences with `zeros` zero digits and `ones` one
/// digits. There are C(N, ones) of them, N = zeros + ones.
class SequenceFamily {
 public:
  SequenceFamily(unsigned zeros, unsigned ones) : zeros_(zeros), ones_(ones) {
    if (zeros + ones == 0) throw DomainError(ErrorKind::InvalidArgument, "empty family (N = 0)");
  }

  unsigned zeros() const noexcept { return zeros_; }
  unsigned ones() const noexcept { return ones_; }
  unsigned length() const noexcept { return zeros_ + ones_; }

  /// Only the constant sequence exists when one of the digits is absent.
  bool degenerate() const noexcept { return zeros_ == 0 || ones_ == 0; }

  /// Family obtained by exchanging the roles of 0 and 1.
  SequenceFamily mirrored() const { return {ones_, zeros_}; }

  void require_nondegenerate() const {
    if (degenerate())
      throw DomainError(ErrorKind::DegenerateFamily,
                        "family (m=" + std::to_string(zeros_) + ", n=" + std::to_string(ones_) +
                            ") contains only the constant sequence");
  }

  friend auto operator<=>(const SequenceFamily&, const SequenceFamily&) = default;

 private:
  unsigned zeros_;
  unsigned ones_;
};

/// C(a, b) extended by zero to every integer pair; negative `a` also yields 0.
/// Used inside the closed forms, whose sums run past natural bounds.
inline BigNat binomial_or_zero(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigNat result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: result is C(a-b+i, i) after this step
  }
  return result;
}

/// C(a, b) for a >= 0; zero outside 0 <= b <= a, and C(0, 0) = 1.
inline BigNat binomial(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::invalid_argument("binomial: negative upper index " + std::to_string(a));
  return binomial_or_zero(a, b);
}

inline BigNat factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigNat result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

/// (x)_k = x (x-1) ... (x-k+1), with (x)_0 = 1.
inline BigNat falling_factorial(std::int64_t x, std::int64_t k) {
  if (x < 0 || k < 0) throw std::invalid_argument("falling_factorial: negative argument");
  BigNat result = 1;
  for (std::int64_t i = 0; i < k; ++i) result *= (x - i);
  return result;
}

/// Stirling numbers of the second kind via the inclusion-exclusion sum
/// S(r, l) = (1/l!) sum_j (-1)^(l-j) C(l, j) j^r.
inline BigNat stirling2(std::int64_t r, std::int64_t l) {
  if (r < 0 || l < 0) throw std::invalid_argument("stirling2: negative argument");
  if (l > r) return 0;
  if (r == 0) return 1;
  if (l == 0) return 0;
  BigNat sum = 0;
  for (std::int64_t j = 0; j <= l; ++j) {
    BigNat term = binomial(l, j) * boost::multiprecision::pow(BigNat(j), static_cast<unsigned>(r));
    if ((l - j) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return divide_exact(sum, factorial(l));
}

/// De Moivre number M^h_m: compositions of `weight` into `height` ordered
/// positive parts, C(m-1, h-1). M^0_0 = 1; any negative index gives 0.
inline BigNat demoivre(std::int64_t height, std::int64_t weight) {
  if (height < 0 || weight < 0) return 0;
  if (height == 0) return weight == 0 ? 1 : 0;
  if (weight == 0) return 0;
  return binomial_or_zero(weight - 1, height - 1);
}

/// P^h_m: partitions of `weight` into exactly `height` positive parts,
/// disregarding order. P^0_0 = 1.
inline BigNat partition_count(std::int64_t height, std::int64_t weight) {
  if (height < 0 || weight < 0 || height > weight) return height == 0 && weight == 0 ? 1 : 0;
  if (height == 0) return weight == 0 ? 1 : 0;
  // table[h][w] = P^h_w; P^h_w = P^{h-1}_{w-1} + P^h_{w-h}
  std::vector<std::vector<BigNat>> table(height + 1, std::vector<BigNat>(weight + 1, 0));
  table[0][0] = 1;
  for (std::int64_t h = 1; h <= height; ++h)
    for (std::int64_t w = h; w <= weight; ++w)
      table[h][w] = table[h - 1][w - 1] + table[h][w - h];
  return table[height][weight];
}

/// Visits every partition of `weight` into exactly `height` parts, largest part
/// first, in lexicographically decreasing order.
inline void for_each_partition(unsigned weight, unsigned height,
                               const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (height == 0) {
    if (weight == 0) visit({});
    return;
  }
  if (weight < height) return;
  std::vector<unsigned> parts;
  parts.reserve(height);
  std::function<void(unsigned, unsigned, unsigned)> rec = [&](unsigned left, unsigned slots,
                                                               unsigned cap) {
    if (slots == 0) {
      if (left == 0) visit(parts);
      return;
    }
    // remaining slots - 1 parts need at least one unit each
    unsigned hi = std::min(cap, left - (slots - 1));
    unsigned lo = (left + slots - 1) / slots;  // the largest remaining part is at least the mean
    for (unsigned p = hi; p >= lo && p >= 1; --p) {
      parts.push_back(p);
      rec(left - p, slots - 1, p);
      parts.pop_back();
      if (p == 1) break;
    }
  };
  rec(weight, height, weight);
}

/// Visits every composition (ordered partition) of `weight` into `height`
/// positive parts.
inline void for_each_composition(unsigned weight, unsigned height,
                                 const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (height == 0) {
    if (weight == 0) visit({});
    return;
  }
  if (weight < height) return;
  std::vector<unsigned> parts(height, 1);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned index, unsigned left) {
    if (index + 1 == height) {
      parts[index] = left;
      visit(parts);
      return;
    }
    unsigned rest = height - index - 1;
    for (unsigned p = 1; p + rest <= left; ++p) {
      parts[index] = p;
      rec(index + 1, left - p);
    }
  };
  rec(0, weight);
}

}  // namespace cycloseq
