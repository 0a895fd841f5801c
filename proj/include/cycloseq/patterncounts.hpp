#pragma once

#include "cycloseq/coeffs.hpp"
#include "cycloseq/oracle.hpp"
#include "cycloseq/pattern.hpp"
#include "cycloseq/tnumbers.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cycloseq {

namespace detail {

/// Shape of a pattern the closed forms cover, written for the zero digit;
/// `flip` says the pattern is the digit-exchanged form.
struct SolvedShape {
  enum Kind {
    single,       // 0
    jump,         // 01, 10
    run,          // 0^q, q >= 2
    run_then_one, // 0^q 1 or 1 0^q, q >= 2
    isolated,     // 101
  } kind;
  unsigned q = 0;
  bool flip = false;
};

inline std::optional<SolvedShape> classify(const Pattern& u) {
  auto zero_form = [](const std::string& s) -> std::optional<SolvedShape> {
    const auto L = static_cast<unsigned>(s.size());
    if (s == "0") return SolvedShape{SolvedShape::single, 1};
    if (s == "01" || s == "10") return SolvedShape{SolvedShape::jump, 1};
    if (s == "101") return SolvedShape{SolvedShape::isolated, 1};
    if (L >= 2 && s.find('1') == std::string::npos) return SolvedShape{SolvedShape::run, L};
    if (L >= 3 && s.back() == '1' && s.find('1') == L - 1)
      return SolvedShape{SolvedShape::run_then_one, L - 1};
    if (L >= 3 && s.front() == '1' && s.find('1', 1) == std::string::npos)
      return SolvedShape{SolvedShape::run_then_one, L - 1};
    return std::nullopt;
  };
  if (auto shape = zero_form(u.str())) return shape;
  if (auto shape = zero_form(u.flipped().str())) {
    shape->flip = true;
    return shape;
  }
  return std::nullopt;
}

/// N/n * sum, asserting integrality.
inline BigNat scale_by_length_over_ones(std::int64_t m, std::int64_t n, const BigNat& sum) {
  return divide_exact(BigNat(m + n) * sum, BigNat(n));
}

/// Closed forms for the zero-digit shapes in the family (m zeros, n ones).
inline BigNat zero_form_count(const SolvedShape& shape, std::int64_t m, std::int64_t n,
                              std::int64_t h) {
  if (h < 0) return 0;
  switch (shape.kind) {
    case SolvedShape::single:
      return h == m ? binomial(m + n, m) : BigNat(0);
    case SolvedShape::jump:
      return h == 0 ? BigNat(0) : t_number(SequenceFamily(m, n), 2 * h);
    case SolvedShape::isolated: {
      // N/n C(n,l) sum_h M^{h-l}_{m-h} C(n-l, h-l)
      BigNat sum = 0;
      for (std::int64_t j = std::max<std::int64_t>(h, 1); j <= n; ++j)
        sum += demoivre(j - h, m - j) * binomial_or_zero(n - h, j - h);
      return scale_by_length_over_ones(m, n, binomial_or_zero(n, h) * sum);
    }
    case SolvedShape::run:
      if (shape.q == 2) {
        // N (m-h) C(m,h) C(n,m-h) / (m n)
        if (h > m) return 0;
        return divide_exact(BigNat(m + n) * (m - h) * binomial(m, h) * binomial_or_zero(n, m - h),
                            BigNat(m * n));
      } else {
        BigNat sum = 0;
        for (std::int64_t j = 1; j <= std::min(m, n); ++j)
          sum += c_weight(shape.q - 2, m, h, j) * binomial(n, j);
        return scale_by_length_over_ones(m, n, sum);
      }
    case SolvedShape::run_then_one: {
      if (shape.q == 2) {
        // N/n C(n,l) sum_h M^l_{m-h} C(n-l, h-l)
        BigNat sum = 0;
        for (std::int64_t j = std::max<std::int64_t>(h, 1); j <= n; ++j)
          sum += demoivre(h, m - j) * binomial_or_zero(n - h, j - h);
        return scale_by_length_over_ones(m, n, binomial_or_zero(n, h) * sum);
      }
      BigNat sum = 0;
      for (std::int64_t j = 1; j <= std::min(m, n); ++j)
        sum += c_general(shape.q - 2, m, j, h) * binomial(n, j);
      return scale_by_length_over_ones(m, n, sum);
    }
  }
  return 0;
}

inline void require_countable(const SequenceFamily& family, const Pattern& u) {
  if (u.size() >= family.length())
    throw DomainError(ErrorKind::PatternTooLong,
                      "pattern " + u.str() + " needs length < N = " + std::to_string(family.length()));
  family.require_nondegenerate();
}

}  // namespace detail

/// True when a closed form covers `u`.
inline bool pattern_is_solved(const Pattern& u) { return detail::classify(u).has_value(); }

/// Number of sequences of `family` with exactly h cyclic occurrences of `u`.
inline BigNat count_pattern(const SequenceFamily& family, const Pattern& u, std::int64_t h) {
  auto shape = detail::classify(u);
  if (!shape)
    throw DomainError(ErrorKind::UnsupportedPattern,
                      "no closed form for pattern " + u.str() + "; use the enumeration oracle");
  detail::require_countable(family, u);
  const SequenceFamily f = shape->flip ? family.mirrored() : family;
  return detail::zero_form_count(*shape, f.zeros(), f.ones(), h);
}

/// Occurrence distribution of `u` from the closed forms.
inline CountDistribution pattern_distribution(const SequenceFamily& family, const Pattern& u) {
  CountDistribution d{family, IndexKind::occurrences, {}};
  for (unsigned h = 0; h <= family.length(); ++h) d.entries[h] = count_pattern(family, u, h);
  d.normalize();
  return d;
}

/// (h, l): h strings (01) and l strings (001). (N/n) c^m_{hl} C(n,h), corner in counting mode.
inline JointDistribution joint_01_001(const SequenceFamily& family) {
  family.require_nondegenerate();
  const std::int64_t m = family.zeros(), n = family.ones();
  JointDistribution d{family, family.length(), {Pattern("01"), Pattern("001")}, {}};
  for (std::int64_t h = 1; h <= std::min(m, n); ++h)
    for (std::int64_t l = 0; l <= h; ++l) {
      BigNat v = detail::scale_by_length_over_ones(
          m, n, c_coeff(m, h, l, CornerMode::counting) * binomial(n, h));
      if (v != 0) d.entries[{unsigned(h), unsigned(l)}] = v;
    }
  return d;
}

/// (h, l): h strings (01) and l strings (101). (N/n) c^m_{h,h-l} C(n,h).
inline JointDistribution joint_01_101(const SequenceFamily& family) {
  family.require_nondegenerate();
  const std::int64_t m = family.zeros(), n = family.ones();
  JointDistribution d{family, family.length(), {Pattern("01"), Pattern("101")}, {}};
  for (std::int64_t h = 1; h <= std::min(m, n); ++h)
    for (std::int64_t l = 0; l <= h; ++l) {
      BigNat v = detail::scale_by_length_over_ones(
          m, n, c_coeff(m, h, h - l, CornerMode::counting) * binomial(n, h));
      if (v != 0) d.entries[{unsigned(h), unsigned(l)}] = v;
    }
  return d;
}

/// (h, l', l): h strings (01), l' strings (001), l strings (0001).
/// (N/n) C(n,h) C(h,l') C(l',l) M^l_{m-h-l'}.
inline JointDistribution triple_01_001_0001(const SequenceFamily& family) {
  family.require_nondegenerate();
  const std::int64_t m = family.zeros(), n = family.ones();
  JointDistribution d{family, family.length(), {Pattern("01"), Pattern("001"), Pattern("0001")}, {}};
  for (std::int64_t h = 1; h <= std::min(m, n); ++h)
    for (std::int64_t lp = 0; lp <= h; ++lp)
      for (std::int64_t l = 0; l <= lp; ++l) {
        BigNat v = detail::scale_by_length_over_ones(
            m, n, binomial(n, h) * binomial(h, lp) * binomial(lp, l) * demoivre(l, m - h - lp));
        if (v != 0) d.entries[{unsigned(h), unsigned(lp), unsigned(l)}] = v;
      }
  return d;
}

/// The m <= 2h corner of the triple table, (N/n) C(n, m-h) C(n-m+h, 2h-m): the
/// count with h strings (01), m-h strings (001) and no (0001).
inline BigNat triple_corner(const SequenceFamily& family, std::int64_t h) {
  family.require_nondegenerate();
  const std::int64_t m = family.zeros(), n = family.ones();
  if (m > 2 * h) return 0;
  return detail::scale_by_length_over_ones(
      m, n, binomial_or_zero(n, m - h) * binomial_or_zero(n - m + h, 2 * h - m));
}

/// Cyclic selections of n of N points with at least p-1 unselected points
/// between any two consecutive selected ones: N/(N-(p-1)n) C(N-(p-1)n, n).
inline BigNat kaplansky(std::int64_t length, std::int64_t n, std::int64_t p) {
  if (length < 1 || n < 0 || p < 1)
    throw DomainError(ErrorKind::InvalidArgument, "kaplansky needs N >= 1, n >= 0, p >= 1");
  if (n == 0) return 1;
  if (n > length) return 0;
  if (n == 1) return length;
  const std::int64_t free = length - (p - 1) * n;
  if (free <= 0) return 0;
  return divide_exact(BigNat(length) * binomial_or_zero(free, n), BigNat(free));
}

/// Nonempty subsets of Z_N holding exactly h runs of r cyclically consecutive
/// elements: sum over n of the (1^r) occurrence counts of the family (N-n, n).
/// The full set contributes at h = N.
inline BigNat fibonacci_gf(std::int64_t length, std::int64_t r, std::int64_t h) {
  if (length < 1 || r < 2 || h < 0)
    throw DomainError(ErrorKind::InvalidArgument, "fibonacci_gf needs N >= 1, r >= 2, h >= 0");
  const detail::SolvedShape run{detail::SolvedShape::run, static_cast<unsigned>(r)};
  BigNat sum = h == length ? 1 : 0;
  for (std::int64_t n = 1; n < length; ++n)
    sum += detail::zero_form_count(run, n, length - n, h);  // ones play the zero role
  return sum;
}

/// Occurrences of (001) over all 2^N words: the family counts summed over m,
/// the two constant words adding to l = 0.
inline BigNat all_sequences_001(std::int64_t length, std::int64_t l) {
  if (length < 4) throw DomainError(ErrorKind::PatternTooLong, "all_sequences_001 needs N > 3");
  if (l < 0) return 0;
  const Pattern u("001");
  BigNat sum = l == 0 ? 2 : 0;
  for (std::int64_t m = 1; m < length; ++m)
    sum += count_pattern(SequenceFamily(m, length - m), u, l);
  return sum;
}

}  // namespace cycloseq
