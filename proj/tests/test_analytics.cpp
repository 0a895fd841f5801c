#include "cycloseq/analytics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>

#include "json.hpp"

using namespace cycloseq;

namespace {

double normalized(const BigNat& v, unsigned m, unsigned n) { return to_double(v) / to_double(binomial(m + n, m)); }

double approx_normalized(unsigned m, unsigned n, unsigned r) {
  return to_double(moment_approx_rational(m, n, r) / Rational(binomial(m + n, m)));
}

// The binomial-jump estimate evaluated in floating point, term by term.
double approx_reference(unsigned m, unsigned n, unsigned r) {
  const double N = m + n, x = 2.0 * m * n / N;
  double series = 0;
  for (unsigned l = 1; l <= r - 1; ++l) {
    double a = 1;
    if (l >= 2) {
      a = std::pow(x, l - 1);
      for (unsigned t = 0; t < l - 2; ++t) a *= (N - 2 - t) / (N - 1);
    }
    series += to_double(stirling2(r - 1, l)) * a;
  }
  return to_double(binomial(m + n, m)) * m * m * n * n / (std::exp2(r - 2) * N * (N - 1)) * series;
}

}  // namespace

TEST(Moments, Examples) {
  EXPECT_EQ(moment_exact(3, 3, 1), 30);
  EXPECT_EQ(moment_exact(2, 2, 2), 8);
  EXPECT_EQ(moment_exact(4, 2, 3), 56);
}

TEST(Moments, ClosedForms) {
  for (unsigned m = 1; m <= 13; ++m)
    for (unsigned n = 1; m + n <= 14; ++n) {
      ASSERT_EQ(moment_exact(m, n, 0), binomial(m + n, n));
      for (unsigned r = 0; r <= 3; ++r)
        if (auto closed = moment_closed_form(m, n, r)) {
          ASSERT_EQ(*closed, Rational(moment_exact(m, n, r)));
        }
    }
  for (unsigned m = 1; m <= 10; ++m) {
    ASSERT_EQ(moment_exact(m, m, 2) * 2 * (2 * m - 1), BigNat(m) * m * m * binomial(2 * m, m));
    ASSERT_EQ(moment_exact(m, m, 3) * 4 * (2 * m - 1), BigNat(m) * m * m * (m + 1) * binomial(2 * m, m));
  }
  EXPECT_FALSE(moment_closed_form(3, 4, 3).has_value());
  EXPECT_FALSE(moment_closed_form(3, 3, 4).has_value());
}

TEST(Moments, ApproximationIsExactAtLowOrder) {
  for (unsigned m = 1; m <= 10; ++m) {
    EXPECT_EQ(moment_approx_rational(m, m, 0), Rational(moment_exact(m, m, 0)));
    EXPECT_EQ(moment_approx_rational(m, m, 1), Rational(moment_exact(m, m, 1)));
    EXPECT_EQ(moment_approx_rational(m, m, 2), Rational(moment_exact(m, m, 2)));
  }
}

TEST(Moments, ApproximationMatchesFloatingReference) {
  for (unsigned m = 1; m <= 10; ++m)
    for (unsigned n = 1; n <= 10; ++n)
      for (unsigned r = 2; r <= 6; ++r) {
        const double ref = approx_reference(m, n, r);
        ASSERT_NEAR(moment_approx(m, n, r).value, ref, 1e-11 * ref) << m << " " << n << " " << r;
      }
}

TEST(Moments, QuotedPairs) {
  EXPECT_EQ(Rational(moment_exact(2, 2, 4)) / 6, Rational(30, 9));
  EXPECT_EQ(moment_approx_rational(2, 2, 4) / 6, Rational(29, 9));
  EXPECT_NEAR(normalized(moment_exact(10, 10, 4), 10, 10), 827.40, 0.01);
  EXPECT_NEAR(approx_normalized(10, 10, 4), 827.22, 0.01);
  EXPECT_NEAR(normalized(moment_exact(10, 10, 5), 10, 10), 4895.51, 0.01);
  EXPECT_NEAR(moment_approx(4, 2, 3).value, 58.67, 0.01);
  EXPECT_NEAR(normalized(moment_exact(3, 3, 4), 3, 3), 11.70, 0.01);
  EXPECT_NEAR(approx_normalized(3, 3, 4), 11.61, 0.01);
}

TEST(Moments, Errors) { EXPECT_THROW(moment_approx(0, 3, 2), DomainError); }

TEST(BinomialModel, PrintedRow) {
  std::ifstream in(std::string(CYCLOSEQ_TEST_DATA) + "/printed_tables.json");
  const auto row = nlohmann::json::parse(in)["table3"]["binomial"];
  const double total = to_double(binomial(10, 5));
  // tau = 0..8; the tau = 10 cell is examined by the acceptance run
  for (unsigned i = 0; i < 5; ++i)
    EXPECT_NEAR(binomial_jump_pmf({5, 5}, 2 * i).value * total, row[i].get<double>(), 0.01) << "tau=" << 2 * i;
}

TEST(BinomialModel, EvenMassClosedForm) {
  for (unsigned m = 1; m <= 8; ++m)
    for (unsigned n = 1; n <= 8; ++n) {
      const SequenceFamily f(m, n);
      const double N = f.length(), p = 2.0 * m * n / (N * (N - 1));
      double mass = 0;
      for (unsigned tau = 0; tau <= f.length(); tau += 2) mass += binomial_jump_pmf(f, tau).value;
      ASSERT_NEAR(mass, 1 + std::pow(1 - 2 * p, N), 1e-12);
    }
  EXPECT_THROW(binomial_jump_pmf({5, 5}, 3), DomainError);
  EXPECT_THROW(binomial_jump_pmf({5, 5}, 12), DomainError);
}

TEST(Stirling, Examples) {
  EXPECT_NEAR(stirling_binomial(10, 3).value, 116.1, 0.05);
  for (unsigned m = 14; m <= 40; m += 2) {
    const double exact = to_double(binomial(m, m / 2));
    EXPECT_LT(std::abs(stirling_binomial(m, m / 2.0).value - exact) / exact, 0.02) << m;
  }
}

TEST(Stirling, WallisSequence) {
  EXPECT_DOUBLE_EQ(wallis_pi(2), 4.0);
  double previous = wallis_pi(2);
  for (unsigned N = 4; N <= 400; N += 2) {
    const double v = wallis_pi(N);
    ASSERT_LT(v, previous);
    ASSERT_GT(v, std::numbers::pi);
    previous = v;
  }
  EXPECT_NEAR(wallis_pi(2000), std::numbers::pi, 1e-3);
  EXPECT_THROW(wallis_pi(7), DomainError);
}

TEST(Asymptotic, PrintedValues) {
  EXPECT_NEAR(t_asymptotic({5, 5}, 2).value, 8.62, 0.01);
  EXPECT_NEAR(t_asymptotic({5, 5}, 10).value, 1.76, 0.01);
  EXPECT_NEAR(t_asymptotic({5, 5}, 12).value, 0.02, 0.01);
}

TEST(Asymptotic, Formula) {
  const double mu = 12.0 * 8 / 20, a = std::log(2.0) - 0.5;
  EXPECT_NEAR(a, 0.193147, 1e-6);
  for (double tau : {1.0, 4.0, 7.5, 12.0}) {
    const double ref = tau * std::exp(-tau * tau / (2 * mu) + 2 * tau + a * 20) /
                       (std::numbers::pi * std::pow(mu, 1.5) * std::sqrt(20.0));
    EXPECT_NEAR(t_asymptotic({12, 8}, tau).value, ref, 1e-12 * ref);
  }
  EXPECT_THROW(t_asymptotic({0, 5}, 2), DomainError);
}

TEST(Gaussian, AllWords) {
  EXPECT_LT(std::abs(allwords_jump_gaussian(8, 4).value - 140) / 140, 0.05);
  for (unsigned N = 1; N <= 20; ++N)
    for (unsigned tau = 0; tau <= N; ++tau)
      ASSERT_NEAR(allwords_jump_gaussian(N, tau).value, allwords_jump_gaussian(N, N - tau).value,
                  1e-9 * allwords_jump_gaussian(N, tau).value);
  double sum = 0;
  for (unsigned tau = 0; tau <= 20; tau += 2) sum += allwords_jump_gaussian(20, tau).value;
  EXPECT_LT(std::abs(sum - std::exp2(20)) / std::exp2(20), 0.02);
}
