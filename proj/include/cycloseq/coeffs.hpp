#pragma once

#include "cycloseq/exactmath.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace cycloseq {

/// Value given to c^i_{i0}, the all-rows-of-length-one corner.
///
/// `formula` is the i * delta_{0k} of the coefficient definition and of the
/// printed c^i_{j0} matrix. `counting` is the tableau count (one empty
/// subtableau per tableau), which the row-sum law and every sequence count need.
enum class CornerMode { formula, counting };

/// c^i_{jk}: dimension-k subtableaux left after deleting the first column of
/// every composition of i into j parts, C(j,k) M^k_{i-j}.
inline BigNat c_coeff(std::int64_t i, std::int64_t j, std::int64_t k,
                      CornerMode mode = CornerMode::formula) {
  if (i < 0 || j < 0 || k < 0 || j > i) return 0;
  if (j == i) return k != 0 ? BigNat(0) : mode == CornerMode::formula ? BigNat(i) : BigNat(1);
  return binomial_or_zero(j, k) * demoivre(k, i - j);
}

/// c^i_{jk} stepped along k with c^i_{j,k+1} = c^i_{jk} (j-k)(i-j-k) / (k (k+1)),
/// seeded with c^i_{j1} = j.
inline BigNat c_coeff_by_recurrence(std::int64_t i, std::int64_t j, std::int64_t k,
                                    CornerMode mode = CornerMode::formula) {
  if (i < 0 || j < 0 || k < 0 || j > i) return 0;
  if (k == 0) return c_coeff(i, j, 0, mode);
  if (j == i) return 0;
  BigNat c = j;
  for (std::int64_t step = 1; step < k && c != 0; ++step)
    c = divide_exact(c * (j - step) * (i - j - step), BigNat(step * (step + 1)));
  return c < 0 ? BigNat(0) : c;
}

/// c'^i_{jk}: dimension-k subtableaux after deleting the first two columns.
inline BigNat c_prime(std::int64_t i, std::int64_t j, std::int64_t k) {
  if (i < 0 || j < 0 || k < 0 || j > i) return 0;
  if (k == 0) return i <= 2 * j ? binomial_or_zero(j, i - j) : BigNat(0);
  BigNat sum = 0;
  for (std::int64_t f = k; f <= std::min(j, i - j - k); ++f)
    sum += binomial_or_zero(j, f) * binomial_or_zero(f, k) * demoivre(k, i - j - f);
  return sum;
}

namespace detail {

/// Visits the chains top >= f_1 >= ... >= f_len >= floor with their sum.
inline void for_each_chain(std::int64_t top, std::int64_t floor, unsigned len,
                           const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> chain(len);
  std::function<void(unsigned, std::int64_t)> rec = [&](unsigned pos, std::int64_t cap) {
    if (pos == len) {
      visit(chain);
      return;
    }
    for (std::int64_t f = floor; f <= cap; ++f) {
      chain[pos] = f;
      rec(pos + 1, f);
    }
  };
  if (top >= floor) rec(0, top);
}

inline BigNat chain_product(std::int64_t top, const std::vector<std::int64_t>& chain) {
  BigNat prod = 1;
  std::int64_t prev = top;
  for (auto f : chain) {
    prod *= binomial_or_zero(prev, f);
    prev = f;
  }
  return prod;
}

inline std::int64_t chain_sum(const std::vector<std::int64_t>& chain) {
  std::int64_t s = 0;
  for (auto f : chain) s += f;
  return s;
}

}  // namespace detail

/// c^(s)i_{jk}: dimension-k subtableaux after deleting s+1 columns. Sum over
/// chains j >= f_1 >= ... >= f_s >= k of C(j,f_1) ... C(f_s,k) M^k_{i-j-f_1-...-f_s}.
/// For k = 0 the De Moivre factor keeps only chains with f_1 + ... + f_s = i - j.
/// At s = 0 this is c^i_{jk} in counting mode; at s = 1 it is c'^i_{jk}.
inline BigNat c_general(unsigned s, std::int64_t i, std::int64_t j, std::int64_t k) {
  if (i < 0 || j < 0 || k < 0 || j > i || k > j) return 0;
  BigNat sum = 0;
  detail::for_each_chain(j, k, s, [&](const std::vector<std::int64_t>& chain) {
    const std::int64_t rest = i - j - detail::chain_sum(chain);
    if (rest < 0) return;
    const std::int64_t last = chain.empty() ? j : chain.back();
    sum += detail::chain_product(j, chain) * binomial_or_zero(last, k) * demoivre(k, rest);
  });
  return sum;
}

/// Weight-indexed coefficients c^(s)mg_h: subtableaux of weight g left after
/// deleting s+1 columns from the compositions of m into h parts.
///
/// s = 0 is c^{mg} = C(m-1, g), which the closed form leaves independent of h.
/// For s >= 1: chains h >= f_1 >= ... >= f_s with f_1 + ... + f_s = m - h - g,
/// each contributing C(h,f_1) ... C(f_{s-1},f_s) sum_k C(f_s,k) M^k_g.
inline BigNat c_weight(unsigned s, std::int64_t m, std::int64_t g, std::int64_t h) {
  if (m < 0 || g < 0 || h < 0) return 0;
  if (s == 0) return binomial_or_zero(m - 1, g);
  if (h > m) return 0;
  BigNat sum = 0;
  const std::int64_t target = m - h - g;
  if (target < 0) return 0;
  detail::for_each_chain(h, 0, s, [&](const std::vector<std::int64_t>& chain) {
    if (detail::chain_sum(chain) != target) return;
    const std::int64_t last = chain.back();
    BigNat tail = 0;
    for (std::int64_t k = 0; k <= last; ++k) tail += binomial_or_zero(last, k) * demoivre(k, g);
    sum += detail::chain_product(h, chain) * tail;
  });
  return sum;
}

/// The two-column weight coefficient written out in binomials:
/// (1/g) sum_l l C(h,l) C(g,l) C(h-l, m-g-h-l) for g > 0, C(h, m-h) if m <= 2h at g = 0.
inline BigNat c_prime_weight_closed(std::int64_t m, std::int64_t g, std::int64_t h) {
  if (m < 0 || g < 0 || h < 0) return 0;
  if (g == 0) return m <= 2 * h ? binomial_or_zero(h, m - h) : BigNat(0);
  BigNat sum = 0;
  for (std::int64_t l = 0; l <= std::min(h, g); ++l)
    sum += BigNat(l) * binomial_or_zero(h, l) * binomial_or_zero(g, l) *
           binomial_or_zero(h - l, m - g - h - l);
  return divide_exact(sum, BigNat(g));
}

enum class AppendixKind { c_by_k, c_by_i, cprime_by_k, cprime_weight };

inline std::string_view name(AppendixKind kind) {
  switch (kind) {
    case AppendixKind::c_by_k: return "c_by_k";
    case AppendixKind::c_by_i: return "c_by_i";
    case AppendixKind::cprime_by_k: return "cprime_by_k";
    case AppendixKind::cprime_weight: return "cprime_weight";
  }
  return "?";
}

inline AppendixKind parse_appendix_kind(std::string_view text) {
  for (auto k : {AppendixKind::c_by_k, AppendixKind::c_by_i, AppendixKind::cprime_by_k,
                 AppendixKind::cprime_weight})
    if (name(k) == text) return k;
  throw DomainError(ErrorKind::InvalidArgument, "unknown appendix kind '" + std::string(text) + "'");
}

/// One coefficient matrix with the fixed index held constant. `cells[r][c]`
/// belongs to row label `row_labels[r]` and column label `column_labels[c]`.
struct CoeffMatrix {
  AppendixKind kind;
  unsigned fixed_index;
  std::vector<unsigned> row_labels;
  std::vector<unsigned> column_labels;
  std::vector<std::vector<BigNat>> cells;

  friend bool operator==(const CoeffMatrix&, const CoeffMatrix&) = default;
};

/// The value layout used by the tabulated matrices:
///   c_by_k        fixed k, rows i, columns j: c^i_{jk} (formula corner)
///   c_by_i        fixed i, rows j, columns k = 0..5
///   cprime_by_k   fixed k, rows i, columns j: c'^i_{jk}
///   cprime_weight fixed g, rows i, columns j: c'^{ig}_j
inline BigNat appendix_cell(AppendixKind kind, unsigned fixed, unsigned row, unsigned column) {
  switch (kind) {
    case AppendixKind::c_by_k: return c_coeff(row, column, fixed);
    case AppendixKind::c_by_i: return c_coeff(fixed, row, column);
    case AppendixKind::cprime_by_k: return c_prime(row, column, fixed);
    case AppendixKind::cprime_weight: return c_weight(1, row, fixed, column);
  }
  return 0;
}

struct AppendixShape {
  std::vector<unsigned> fixed;
  unsigned row_first, row_last, column_first, column_last;
};

/// Index ranges of the tabulated matrices; `max_i` caps the weight index.
inline AppendixShape appendix_shape(AppendixKind kind, unsigned max_i = 12) {
  auto seq = [](unsigned a, unsigned b) {
    std::vector<unsigned> v;
    for (unsigned x = a; x <= b; ++x) v.push_back(x);
    return v;
  };
  switch (kind) {
    case AppendixKind::c_by_k: return {seq(0, 5), 1, max_i, 1, max_i};
    case AppendixKind::c_by_i: return {seq(3, std::min(max_i, 10u)), 1, 10, 0, 5};
    case AppendixKind::cprime_by_k: return {seq(0, 3), 1, max_i, 1, max_i > 0 ? max_i - 1 : 0};
    case AppendixKind::cprime_weight:
      return {seq(0, 3), 1, std::min(max_i, 10u), 1, std::min(max_i, 10u) - 1};
  }
  return {};
}

inline CoeffMatrix appendix_matrix(AppendixKind kind, unsigned fixed, const AppendixShape& shape) {
  CoeffMatrix matrix{kind, fixed, {}, {}, {}};
  unsigned row_last = shape.row_last;
  if (kind == AppendixKind::c_by_i) row_last = std::min(row_last, fixed);  // j <= i
  for (unsigned r = shape.row_first; r <= row_last; ++r) matrix.row_labels.push_back(r);
  for (unsigned c = shape.column_first; c <= shape.column_last; ++c) matrix.column_labels.push_back(c);
  for (unsigned r : matrix.row_labels) {
    auto& row = matrix.cells.emplace_back();
    for (unsigned c : matrix.column_labels) row.push_back(appendix_cell(kind, fixed, r, c));
  }
  return matrix;
}

/// All matrices of one kind, in fixed-index order.
inline std::vector<CoeffMatrix> appendix_tables(AppendixKind kind, unsigned max_i = 12) {
  const auto shape = appendix_shape(kind, max_i);
  std::vector<CoeffMatrix> out;
  for (unsigned f : shape.fixed) out.push_back(appendix_matrix(kind, f, shape));
  return out;
}

struct PascalReport {
  unsigned k;
  unsigned bound;
  std::size_t cells_checked = 0;
  /// (i, j, left, right) for every disagreeing cell.
  std::vector<std::tuple<unsigned, unsigned, BigNat, BigNat>> mismatches;

  bool holds() const { return mismatches.empty(); }
};

/// Checks c'^i_{jk} = sum_f c^{i-j}_{fk} C(j,f) for 1 <= j <= i <= bound, i.e.
/// C'_k = C_k times the Pascal matrix, with the c corner taken per `mode`.
inline PascalReport pascal_identity_check(unsigned k, unsigned bound,
                                          CornerMode mode = CornerMode::counting) {
  PascalReport report{k, bound, 0, {}};
  for (unsigned i = 1; i <= bound; ++i)
    for (unsigned j = 1; j <= i; ++j) {
      const BigNat left = c_prime(i, j, k);
      BigNat right = 0;
      for (unsigned f = 0; f <= j; ++f) {
        right += c_coeff(i - j, f, k, mode) * binomial(j, f);
      }
      ++report.cells_checked;
      if (left != right) report.mismatches.emplace_back(i, j, left, right);
    }
  return report;
}

}  // namespace cycloseq
