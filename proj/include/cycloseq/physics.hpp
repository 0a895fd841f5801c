#pragma once

#include "cycloseq/tnumbers.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace cycloseq {

namespace detail {

/// Pairwise sum in index order, so the rounding does not depend on how the
/// terms were produced.
inline double pairwise_sum(const std::vector<double>& terms, std::size_t lo, std::size_t hi) {
  if (hi - lo == 0) return 0;
  if (hi - lo == 1) return terms[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(terms, lo, mid) + pairwise_sum(terms, mid, hi);
}

inline double pairwise_sum(const std::vector<double>& terms) {
  return pairwise_sum(terms, 0, terms.size());
}

}  // namespace detail

/// Ring of N spins with n spins down; energy J(-N + 2 tau) for tau antiparallel
/// bonds, nu = J/kT. Z = sum_tau T^{N-n,n}_tau e^{(N - 2 tau) nu}.
inline double ising_partition_fixed(unsigned length, unsigned n, double nu) {
  if (n == 0 || n >= length)
    throw DomainError(ErrorKind::DegenerateFamily,
                      "n must lie in 1..N-1; the aligned ring alone has Z = exp(N nu)");
  std::vector<double> terms;
  for (const auto& [tau, count] : t_distribution(SequenceFamily(length - n, n)).entries)
    terms.push_back(to_double(count) * std::exp((double(length) - 2.0 * tau) * nu));
  return detail::pairwise_sum(terms);
}

/// All 2^N configurations: (2 cosh nu)^N + (2 sinh nu)^N.
inline double ising_partition_total(unsigned length, double nu) {
  if (length < 1) throw DomainError(ErrorKind::InvalidArgument, "N must be positive");
  return std::pow(2 * std::cosh(nu), length) + std::pow(2 * std::sinh(nu), length);
}

/// Walk of N unit steps ending at displacement k. With one-step memory a step
/// repeats the previous direction with weight beta and reverses it with weight
/// alpha = 1 - beta; direction changes are counted around the cycle, so the
/// paths with tau changes number T^{(N+k)/2,(N-k)/2}_tau.
struct WalkWeights {
  unsigned length;
  int displacement;
  std::map<unsigned, BigNat> coefficients;  // tau -> number of paths

  BigNat path_count() const {
    BigNat s = 0;
    for (const auto& [tau, c] : coefficients) s += c;
    return s;
  }

  /// sum_tau T alpha^tau beta^{N - tau}
  double weight(double alpha) const {
    const double beta = 1 - alpha;
    std::vector<double> terms;
    for (const auto& [tau, c] : coefficients)
      terms.push_back(to_double(c) * std::pow(alpha, double(tau)) *
                      std::pow(beta, double(length) - tau));
    return detail::pairwise_sum(terms);
  }
};

inline WalkWeights walk_weight_polynomial(unsigned length, int displacement) {
  const long long N = length, k = displacement;
  if (length < 1 || std::llabs(k) > N || (N + k) % 2 != 0)
    throw DomainError(ErrorKind::InvalidDisplacement,
                      "need |k| <= N and N + k even, got N = " + std::to_string(N) +
                          ", k = " + std::to_string(k));
  const SequenceFamily family(static_cast<unsigned>((N + k) / 2), static_cast<unsigned>((N - k) / 2));
  return {length, displacement, t_distribution(family).entries};
}

}  // namespace cycloseq
