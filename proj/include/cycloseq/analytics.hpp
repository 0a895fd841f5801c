#pragma once

#include "cycloseq/tnumbers.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

namespace cycloseq {

/// A floating-point approximation together with the formula that produced it.
struct ApproxValue {
  double value;
  std::string context;
};

namespace detail {

inline ApproxValue finite(double value, std::string context) {
  if (!std::isfinite(value))
    throw DomainError(ErrorKind::InvalidArgument, context + " is not finite here");
  return {value, std::move(context)};
}

inline Rational rational_pow(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace detail

/// sum_h h^r C(m,h) C(n,h), summed directly.
inline BigNat moment_exact(unsigned m, unsigned n, unsigned r) {
  BigNat sum = 0;
  for (unsigned h = (r == 0 ? 0 : 1); h <= std::min(m, n); ++h)
    sum += boost::multiprecision::pow(BigNat(h), r) * binomial(m, h) * binomial(n, h);
  return sum;
}

/// Closed forms of the same sum: r = 0 gives C(N,m), r = 1 gives (mn/N) C(N,m),
/// r = 2 gives m^2 n^2 / (N(N-1)) C(N,m), and for m = n, r = 3 gives
/// m^3 (m+1) / (4(2m-1)) C(2m,m). Empty where no closed form is known.
inline std::optional<Rational> moment_closed_form(unsigned m, unsigned n, unsigned r) {
  const std::int64_t N = m + n;
  if (N == 0) return std::nullopt;
  const Rational total = Rational(binomial(N, m));
  switch (r) {
    case 0: return total;
    case 1: return Rational(BigNat(m) * n, BigNat(N)) * total;
    case 2:
      if (N < 2) return Rational(0);
      return Rational(BigNat(m) * m * n * n, BigNat(N) * (N - 1)) * total;
    case 3:
      if (m != n) return std::nullopt;
      return Rational(BigNat(m) * m * m * (m + 1), BigNat(4) * (2 * m - 1)) * total;
    default: return std::nullopt;
  }
}

/// The Stirling-number estimate of sum_h h^r C(m,h) C(n,h) from the binomial
/// jump model, as an exact rational:
///   C(N, m^n) m^2 n^2 / (2^{r-2} N (N-1)) sum_{l=1}^{r-1} S(r-1,l) A^l,
///   A^1 = 1, A^l = (2mn/N)^{l-1} (N-2)_{l-2} / (N-1)^{l-2}.
/// r = 0 and r = 1 return the exact C(N,m) and (mn/N) C(N,m).
inline Rational moment_approx_rational(unsigned m, unsigned n, unsigned r) {
  const std::int64_t N = m + n;
  if (m == 0 || n == 0) throw DomainError(ErrorKind::DegenerateFamily, "moment_approx needs m, n >= 1");
  if (r <= 1) return *moment_closed_form(m, n, r);
  if (N < 2) return 0;
  const Rational jump_pairs(BigNat(2) * m * n, BigNat(N));
  Rational series = 0;
  for (unsigned l = 1; l <= r - 1; ++l) {
    Rational a = 1;
    if (l >= 2)
      a = detail::rational_pow(jump_pairs, l - 1) * Rational(falling_factorial(N - 2, l - 2)) /
          detail::rational_pow(Rational(N - 1), l - 2);
    series += Rational(stirling2(r - 1, l)) * a;
  }
  const Rational prefactor(binomial(N, std::min(m, n)) * m * m * n * n,
                           boost::multiprecision::pow(BigNat(2), r - 2) * N * (N - 1));
  return prefactor * series;
}

inline ApproxValue moment_approx(unsigned m, unsigned n, unsigned r) {
  return detail::finite(to_double(moment_approx_rational(m, n, r)), "moment approximation");
}

/// Binomial model of the jump count: 2 C(N,tau) p^tau (1-p)^{N-tau}, p = 2mn/(N(N-1)).
inline ApproxValue binomial_jump_pmf(const SequenceFamily& family, std::int64_t tau) {
  const double N = family.length();
  if (tau < 0 || tau % 2 != 0 || tau > family.length())
    throw DomainError(ErrorKind::InvalidTau, "tau must be even with 0 <= tau <= N");
  if (family.length() < 2) throw DomainError(ErrorKind::InvalidArgument, "binomial model needs N >= 2");
  const double p = 2.0 * family.zeros() * family.ones() / (N * (N - 1));
  const double value = 2.0 * to_double(binomial(family.length(), tau)) * std::pow(p, double(tau)) *
                       std::pow(1 - p, N - double(tau));
  return detail::finite(value, "binomial jump model");
}

/// Gaussian form of C(m,h): 2^{m+1} exp(-(2h-m)^2 / (2m)) / sqrt(2 pi m).
inline ApproxValue stirling_binomial(unsigned m, double h) {
  if (m < 1) throw DomainError(ErrorKind::InvalidArgument, "stirling_binomial needs m >= 1");
  const double md = m;
  const double value = std::exp2(md + 1) * std::exp(-(2 * h - md) * (2 * h - md) / (2 * md)) /
                       std::sqrt(2 * std::numbers::pi * md);
  return detail::finite(value, "Gaussian binomial");
}

/// Jump count asymptotics: tau exp(-tau^2/(2 mu) + 2 tau + aN) / (pi mu^{3/2} sqrt N),
/// a = -1/2 + ln 2, 1/mu = 1/m + 1/n. `tau` may be any real.
inline ApproxValue t_asymptotic(const SequenceFamily& family, double tau) {
  family.require_nondegenerate();
  const double m = family.zeros(), n = family.ones(), N = family.length();
  const double mu = m * n / (m + n);
  const double a = -0.5 + std::numbers::ln2;
  const double value = tau * std::exp(-tau * tau / (2 * mu) + 2 * tau + a * N) /
                       (std::numbers::pi * std::pow(mu, 1.5) * std::sqrt(N));
  return detail::finite(value, "jump asymptotics");
}

/// Gaussian form of 2 C(N,tau): 2^{N+2} / sqrt(2 pi N) exp(-(2 tau - N)^2 / (2N)).
inline ApproxValue allwords_jump_gaussian(unsigned length, double tau) {
  if (length < 1) throw DomainError(ErrorKind::InvalidArgument, "N must be positive");
  const double N = length;
  const double value = std::exp2(N + 2) / std::sqrt(2 * std::numbers::pi * N) *
                       std::exp(-(2 * tau - N) * (2 * tau - N) / (2 * N));
  return detail::finite(value, "all-words jump Gaussian");
}

/// pi_N = (2^{N+1} / sqrt(2N))^2 C(N, N/2)^{-2} for even N; tends to pi.
inline double wallis_pi(unsigned length) {
  if (length < 2 || length % 2 != 0)
    throw DomainError(ErrorKind::InvalidArgument, "wallis_pi needs an even N >= 2");
  const double N = length;
  const double log_binom = std::lgamma(N + 1) - 2 * std::lgamma(N / 2 + 1);
  return std::exp(2 * ((N + 1) * std::numbers::ln2 - 0.5 * std::log(2 * N) - log_binom));
}

}  // namespace cycloseq
