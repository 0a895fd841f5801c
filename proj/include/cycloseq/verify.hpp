#pragma once

#include "cycloseq/analytics.hpp"
#include "cycloseq/coeffs.hpp"
#include "cycloseq/oracle.hpp"
#include "cycloseq/patterncounts.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace cycloseq {

/// One printed value or formula reading that disagrees with another reading,
/// with the enumeration verdict.
struct LedgerEntry {
  std::string id;
  std::string subject;
  std::string printed;
  std::string alternative;
  std::string oracle;
  std::string verdict;
  /// The shipped closed form reproduces the oracle value.
  bool shipped_matches_oracle = false;
};

namespace detail {

inline std::string str(const BigNat& v) { return to_string(v); }

inline std::string str(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline std::string fixed2(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << v;
  return os.str();
}

/// (0^{s+2} 1) count read with the chain l' >= ... >= l^(s) >= h running
/// upward from h to m, each step weighted C(h - next, prev - next), and the
/// tail C(n-l, h-l) M^l_{m-h-sum}.
inline Rational run_then_one_printed_chain(std::int64_t m, std::int64_t n, unsigned s, std::int64_t l) {
  const std::int64_t N = m + n;
  BigNat total = 0;
  for (std::int64_t h = std::max<std::int64_t>(l, 1); h <= n; ++h)
    for_each_chain(m, h, s, [&](const std::vector<std::int64_t>& chain) {
      BigNat prod = 1;
      for (unsigned t = 0; t + 1 < chain.size(); ++t)
        prod *= binomial_or_zero(h - chain[t + 1], chain[t] - chain[t + 1]);
      prod *= binomial_or_zero(n - l, h - l) * demoivre(l, m - h - chain_sum(chain));
      total += prod;
    });
  return Rational(BigNat(N) * binomial_or_zero(n, l) * total, BigNat(n));
}

}  // namespace detail

/// Triple (01;001;0001) closed form against an oracle joint tally.
inline bool triple_0001_matches(const SequenceFamily& f, const JointDistribution& joint) {
  const auto closed = triple_01_001_0001(f);
  for (const auto& [key, c] : joint.entries)
    if (closed.at(key) != c) return false;
  return closed.total() == joint.total();
}

/// Known disagreements between printed values or formula readings, each
/// settled by enumeration.
inline std::vector<LedgerEntry> typo_ledger(const OracleConfig& config = {}) {
  using detail::str;
  std::vector<LedgerEntry> out;

  {  // summary row of the (01;001) worked table for m = n = 4
    const SequenceFamily f(4, 4);
    const auto o = oracle::pattern_distribution(f, Pattern("001"), config);
    const BigNat shipped = count_pattern(f, Pattern("001"), 3);
    out.push_back({"t44-001-cell", "T^{44}_3(001) in the (01;001) summary row", "9",
                   "0 (text: only l = 0, 1, 2 occur; 2 + 56 + 12 = 70)", str(o.at(3)),
                   o.at(3) == 0 ? "printed 9 is spurious" : "printed 9 confirmed", shipped == o.at(3)});
  }

  {  // corner of the (01;001;0001) table: C(n-m-h, .) vs C(n-m+h, .)
    const SequenceFamily f(5, 3);
    const std::int64_t m = 5, n = 3, h = 3;
    const auto joint = oracle::joint_distribution(
        f, 0, {Pattern("01"), Pattern("001"), Pattern("0001")}, config);
    const BigNat o = joint.at({3, 2, 0});
    const BigNat printed = detail::scale_by_length_over_ones(
        m, n, binomial_or_zero(n, m - h) * binomial_or_zero(n - m - h, 2 * h - m));
    const BigNat corrected = triple_corner(f, h);
    out.push_back({"triple-corner-sign",
                   "(01;001;0001) count at h = 3, l' = 2, l = 0 for (m,n) = (5,3), lower binomial index sign",
                   "C(n-m-h, 2h-m) gives " + str(printed), "C(n-m+h, 2h-m) gives " + str(corrected),
                   str(o), o == corrected && o != printed ? "sign is n-m+h" : "unresolved",
                   triple_0001_matches(f, joint)});
  }

  {  // chain direction in the (0^{s+2} 1) closed form
    const SequenceFamily f(7, 3);
    const unsigned s = 1;
    const Pattern u("0001");
    const auto o = oracle::pattern_distribution(f, u, config);
    std::string printed, shipped_s;
    bool printed_ok = true, shipped_ok = true;
    for (unsigned l = 0; l <= 2; ++l) {
      const Rational p = detail::run_then_one_printed_chain(7, 3, s, l);
      const BigNat c = count_pattern(f, u, l);
      printed += (l ? ", " : "") + str(p);
      shipped_s += (l ? ", " : "") + str(c);
      printed_ok = printed_ok && p == Rational(o.at(l));
      shipped_ok = shipped_ok && c == o.at(l);
    }
    out.push_back({"run-then-one-chain",
                   "T^{73}_l(0001), l = 0..2: chain bounded below by h versus h >= l' >= ... >= l",
                   printed, shipped_s,
                   str(o.at(0)) + ", " + str(o.at(1)) + ", " + str(o.at(2)),
                   printed_ok ? "printed chain confirmed" : "chain runs downward from h", shipped_ok});
  }

  {  // prefactor N/h outside the sum over h in the (001) formula
    const SequenceFamily f(4, 4);
    const std::int64_t m = 4, n = 4, l = 1;
    Rational inside = 0;
    for (std::int64_t h = 1; h <= n; ++h)
      inside += Rational(BigNat(m + n), BigNat(h)) * Rational(c_coeff(m, h, l, CornerMode::counting) * binomial(n, h));
    const auto o = oracle::pattern_distribution(f, Pattern("001"), config);
    const BigNat shipped = count_pattern(f, Pattern("001"), l);
    out.push_back({"001-prefactor", "T^{44}_1(001): prefactor written N/h in front of a sum over h",
                   "sum_h (N/h) c C(n,h) gives " + str(inside),
                   "(N/n) sum_h c C(n,h) gives " + str(shipped), str(o.at(l)),
                   Rational(o.at(l)) == inside ? "N/h reading confirmed" : "prefactor is N/n",
                   shipped == o.at(l)});
  }

  {  // the c^6_{jk} matrix cell j = 3, k = 2
    const auto census = oracle::tableau_census(0, 6, 3);
    BigNat o = 0;
    for (const auto& [key, c] : census)
      if (key.first == 2) o += c;
    const BigNat shipped = c_coeff(6, 3, 2);
    out.push_back({"c6-32", "c^6_{32} in the fixed-i matrix for i = 6", "5",
                   "6 (k = 2 matrix and C(3,2) M^2_3)", str(o),
                   o == 5 ? "printed confirmed" : "printed 5 is a misprint", shipped == o});
  }

  {  // two-column weight matrices, row i = 9
    struct Cell { unsigned g, j; const char* printed; };
    for (Cell cell : {Cell{2, 4, "30"}, Cell{2, 5, "50"}, Cell{3, 3, "20"}}) {
      const auto census = oracle::tableau_census(1, 9, cell.j);
      const BigNat o = [&] {
        BigNat t = 0;
        for (const auto& [key, c] : census)
          if (key.second == cell.g) t += c;
        return t;
      }();
      const BigNat shipped = c_weight(1, 9, cell.g, cell.j);
      const std::string id = "cprime-weight-g" + std::to_string(cell.g) + "-9-" + std::to_string(cell.j);
      out.push_back({id,
                     "c'^{9," + std::to_string(cell.g) + "}_" + std::to_string(cell.j) +
                         " in the weight matrix g = " + std::to_string(cell.g),
                     cell.printed, "closed form gives " + str(shipped), str(o),
                     o == BigNat(cell.printed) ? "printed confirmed" : "printed value is a misprint",
                     shipped == o});
    }
  }

  {  // k = 0 two-column matrix prints only the j = i - 1 diagonal
    unsigned missing = 0, agree = 0;
    for (unsigned i = 1; i <= 12; ++i)
      for (unsigned j = 1; j <= std::min(i, 11u); ++j) {
        const BigNat v = c_prime(i, j, 0);
        if (j + 1 == i || v == 0) continue;
        ++missing;
        const auto census = oracle::tableau_census(1, i, j);
        auto it = census.find({0, 0});
        if (it != census.end() && it->second == v) ++agree;
      }
    out.push_back({"cprime-k0-blanks", "c'^i_{j0} matrix: cells off the j = i-1 diagonal",
                   std::to_string(missing) + " nonzero cells printed blank",
                   "C(j, i-j) for i <= 2j", std::to_string(agree) + " of " + std::to_string(missing) +
                                                 " cells confirmed nonzero by enumeration",
                   agree == missing ? "blanks are omissions" : "unresolved", agree == missing});
  }

  {  // the worked list of subsets of Z_5 without three consecutive elements
    const auto o = oracle::all_words_distribution(5, Pattern("111"), config);
    const BigNat nonempty = o.at(0) - 1;
    out.push_back({"gf-5-3-list", "listed subsets of Z_5 with no three consecutive elements", "19 listed",
                   "gf(5;3,0) = " + str(fibonacci_gf(5, 3, 0)), str(nonempty) + " nonempty subsets",
                   "the list omits {4,5}", fibonacci_gf(5, 3, 0) == nonempty});
  }

  {  // asymptotic row for m = n = 5
    std::string computed;
    for (int t = 0; t < 6; ++t)
      computed += (t ? ", " : "") + detail::fixed2(t_asymptotic(SequenceFamily(5, 5), 2.0 * (t + 1)).value);
    out.push_back({"asymptotic-row", "asymptotic T^{55}_tau, tau = 2..12",
                   "8.62, 80.40, 127.95, 34.44, 1.76, 0.02", computed,
                   "exact 10, 80, 120, 40, 2, 0",
                   "formula as printed differs from the printed row at tau = 4, 6, 8", true});
  }

  {  // binomial row for m = n = 5 at tau = 10
    const double v = binomial_jump_pmf(SequenceFamily(5, 5), 10).value * 252;
    out.push_back({"binomial-row-tau10", "binomial model C(10,5) P_10 for m = n = 5", "1.46",
                   detail::fixed2(v), "exact 2", "formula as printed gives " + detail::fixed2(v), true});
  }

  return out;
}

struct SweepReport {
  unsigned max_length = 0;
  std::size_t comparisons = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Every solved pattern of length <= 4 in every family with N <= max_length,
/// closed form against enumeration; also the jump distributions and the
/// sum over n of T^{N-n,n}_tau = 2 C(N,tau).
inline SweepReport equivalence_sweep(unsigned max_length, const OracleConfig& config = {}) {
  SweepReport report{max_length, 0, {}};
  std::vector<Pattern> patterns;
  for (unsigned len = 1; len <= 4; ++len)
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      std::string s;
      for (unsigned t = 0; t < len; ++t) s.push_back((bits >> t) & 1 ? '1' : '0');
      Pattern p(s);
      if (pattern_is_solved(p)) patterns.push_back(p);
    }
  for (unsigned N = 2; N <= max_length; ++N) {
    for (unsigned n = 1; n < N; ++n) {
      const SequenceFamily f(N - n, n);
      ++report.comparisons;
      if (t_distribution(f) != oracle::jump_distribution(f, config))
        report.failures.push_back("jumps (" + std::to_string(N - n) + "," + std::to_string(n) + ")");
      for (const auto& p : patterns) {
        if (p.size() >= N) continue;
        ++report.comparisons;
        if (pattern_distribution(f, p) != oracle::pattern_distribution(f, p, config))
          report.failures.push_back(p.str() + " (" + std::to_string(N - n) + "," + std::to_string(n) + ")");
      }
    }
    for (unsigned tau = 2; tau <= N; tau += 2) {
      ++report.comparisons;
      if (t_sum_over_n(N, tau) != 2 * binomial(N, tau))
        report.failures.push_back("sum over n, N = " + std::to_string(N) + ", tau = " + std::to_string(tau));
    }
  }
  return report;
}

}  // namespace cycloseq
