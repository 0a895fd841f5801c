#pragma once

#include "cycloseq/exactmath.hpp"

#include <cstdint>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

namespace cycloseq {

enum class IndexKind { tau, occurrences, weight };

constexpr std::string_view name(IndexKind kind) {
  switch (kind) {
    case IndexKind::tau: return "tau";
    case IndexKind::occurrences: return "occurrences";
    case IndexKind::weight: return "weight";
  }
  return "?";
}

/// Exact map index -> number of sequences of `family`.
///
/// Occurrence and weight distributions are stored densely from index 0 up to
/// the largest nonzero index; jump (tau) distributions list only the even
/// indices that carry sequences.
struct CountDistribution {
  SequenceFamily family;
  IndexKind index_kind;
  std::map<unsigned, BigNat> entries;

  BigNat at(unsigned index) const {
    auto it = entries.find(index);
    return it == entries.end() ? BigNat(0) : it->second;
  }

  BigNat total() const {
    BigNat sum = 0;
    for (const auto& [index, count] : entries) sum += count;
    return sum;
  }

  /// Applies the storage convention above to a raw tally.
  void normalize() {
    for (auto it = entries.begin(); it != entries.end();)
      it = it->second == 0 ? entries.erase(it) : std::next(it);
    if (index_kind == IndexKind::tau || entries.empty()) return;
    unsigned top = entries.rbegin()->first;
    for (unsigned i = 0; i < top; ++i) entries.try_emplace(i, 0);
  }

  friend bool operator==(const CountDistribution&, const CountDistribution&) = default;
};

namespace detail {

inline void require_even_tau(std::int64_t tau) {
  if (tau <= 0 || tau % 2 != 0)
    throw DomainError(ErrorKind::InvalidTau,
                      "tau must be a positive even integer, got " + std::to_string(tau));
}

}  // namespace detail

/// T^{mn}_tau: sequences with exactly tau jumps, N h C(m,h) C(n,h) / (m n), h = tau/2.
inline BigNat t_number(const SequenceFamily& family, std::int64_t tau) {
  detail::require_even_tau(tau);
  family.require_nondegenerate();
  const std::int64_t m = family.zeros(), n = family.ones(), h = tau / 2;
  if (h > std::min(m, n)) return 0;
  return divide_exact(BigNat(m + n) * h * binomial(m, h) * binomial(n, h), BigNat(m * n));
}

/// Same values as t_number, stepping T_{tau+2} = 4 (m - tau/2)(n - tau/2) / (tau (tau+2)) T_tau
/// up from T_2 = N.
inline BigNat t_number_by_recurrence(const SequenceFamily& family, std::int64_t tau) {
  detail::require_even_tau(tau);
  family.require_nondegenerate();
  const std::int64_t m = family.zeros(), n = family.ones();
  BigNat t = m + n;
  for (std::int64_t t_at = 2; t_at < tau && t != 0; t_at += 2) {
    const std::int64_t h = t_at / 2;
    t = divide_exact(t * 4 * (m - h) * (n - h), BigNat(t_at * (t_at + 2)));
  }
  return t;
}

/// Full jump distribution. A degenerate family holds one constant sequence
/// with no jumps, reported as {0: 1}.
inline CountDistribution t_distribution(const SequenceFamily& family) {
  CountDistribution dist{family, IndexKind::tau, {}};
  if (family.degenerate()) {
    dist.entries[0] = 1;
    return dist;
  }
  const unsigned top = std::min(family.zeros(), family.ones());
  for (unsigned h = 1; h <= top; ++h) dist.entries[2 * h] = t_number(family, 2 * h);
  return dist;
}

/// Number of length-N cyclic words (both digits present) with exactly tau jumps,
/// summed over the ones count.
inline BigNat t_sum_over_n(unsigned length, std::int64_t tau) {
  detail::require_even_tau(tau);
  if (length == 0) throw DomainError(ErrorKind::InvalidArgument, "length must be positive");
  BigNat sum = 0;
  for (unsigned n = 1; n < length; ++n) sum += t_number(SequenceFamily(length - n, n), tau);
  return sum;
}

/// Unordered block structure of a sequence: zero-run lengths and one-run
/// lengths, each sorted descending. Both lists have the same size h.
struct SequenceType {
  std::vector<unsigned> zero_blocks;
  std::vector<unsigned> one_blocks;

  unsigned height() const { return static_cast<unsigned>(zero_blocks.size()); }

  friend auto operator<=>(const SequenceType&, const SequenceType&) = default;
};

/// N h! (h-1)! over the factorials of the part multiplicities of both partitions.
inline BigNat type_multiplicity(const SequenceType& type, unsigned length) {
  const unsigned h = type.height();
  BigNat num = BigNat(length) * factorial(h) * factorial(h - 1);
  BigNat den = 1;
  for (const auto* blocks : {&type.zero_blocks, &type.one_blocks}) {
    std::map<unsigned, unsigned> mult;
    for (unsigned b : *blocks) ++mult[b];
    for (const auto& [part, alpha] : mult) den *= factorial(alpha);
  }
  return divide_exact(num, den);
}

/// Every type of the family with its number of sequences, types in
/// lexicographic order.
inline std::vector<std::pair<SequenceType, BigNat>> type_census(const SequenceFamily& family) {
  family.require_nondegenerate();
  std::vector<std::pair<SequenceType, BigNat>> census;
  const unsigned top = std::min(family.zeros(), family.ones());
  for (unsigned h = 1; h <= top; ++h) {
    std::vector<std::vector<unsigned>> zeros, ones;
    for_each_partition(family.zeros(), h, [&](const auto& p) { zeros.push_back(p); });
    for_each_partition(family.ones(), h, [&](const auto& p) { ones.push_back(p); });
    for (const auto& z : zeros)
      for (const auto& o : ones) {
        SequenceType type{z, o};
        census.emplace_back(type, type_multiplicity(type, family.length()));
      }
  }
  std::sort(census.begin(), census.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return census;
}

}  // namespace cycloseq
