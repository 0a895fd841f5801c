#include "cycloseq/oracle.hpp"
#include "cycloseq/physics.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace cycloseq;

namespace {

// Spins as bits of w; each equal neighbour pair contributes +nu, each unequal -nu.
double ring_sum(unsigned N, int down, double nu) {
  double z = 0;
  for (Word w = 0; w < (Word(1) << N); ++w) {
    if (down >= 0 && std::popcount(w) != down) continue;
    int e = 0;
    for (unsigned i = 0; i < N; ++i) e += ((w >> i) & 1) == ((w >> ((i + 1) % N)) & 1) ? 1 : -1;
    z += std::exp(e * nu);
  }
  return z;
}

}  // namespace

TEST(Ising, FixedMagnetization) {
  const double nu = 0.5;
  EXPECT_NEAR(ising_partition_fixed(4, 2, nu), 4 + 2 * std::exp(-4 * nu), 1e-12);
  EXPECT_NEAR(ising_partition_fixed(4, 2, nu), ring_sum(4, 2, nu), 1e-12);
  for (unsigned N = 2; N <= 12; ++N)
    for (unsigned n = 1; n < N; ++n) {
      ASSERT_NEAR(ising_partition_fixed(N, n, 0), to_double(binomial(N, n)), 1e-9);
      for (double v : {0.1, 0.5, 1.0}) {
        const double ref = oracle::ising_boltzmann_sum(N, n, v);
        ASSERT_NEAR(ising_partition_fixed(N, n, v), ref, 1e-12 * ref);
      }
    }
  try {
    ising_partition_fixed(6, 0, 0.3);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateFamily);
  }
  EXPECT_THROW(ising_partition_fixed(6, 6, 0.3), DomainError);
}

TEST(Ising, Total) {
  for (unsigned N = 1; N <= 12; ++N) EXPECT_DOUBLE_EQ(ising_partition_total(N, 0), std::exp2(N));
  const double z8 = ising_partition_total(8, 0.5);
  EXPECT_NEAR(z8, ring_sum(8, -1, 0.5), 1e-12 * z8);
  for (unsigned N = 2; N <= 12; N += 2) EXPECT_GE(ising_partition_total(N, 0.7), std::pow(2 * std::cosh(0.7), N));
}

TEST(Ising, FixedSectorsPlusAlignedRings) {
  for (unsigned N = 2; N <= 12; ++N)
    for (double nu : {0.1, 0.5, 1.0}) {
      double sum = 2 * std::exp(N * nu);
      for (unsigned n = 1; n < N; ++n) sum += ising_partition_fixed(N, n, nu);
      const double total = ising_partition_total(N, nu);
      ASSERT_NEAR(sum, total, 1e-10 * total);
      const double deficit = oracle::ising_boltzmann_sum(N, std::nullopt, nu) - std::pow(2 * std::cosh(nu), N);
      const double sinh_term = std::pow(2 * std::sinh(nu), N);
      ASSERT_NEAR(deficit, sinh_term, 1e-10 * total);
    }
}

TEST(Walk, Coefficients) {
  const auto w = walk_weight_polynomial(7, 1);
  EXPECT_EQ(w.coefficients, (std::map<unsigned, BigNat>{{2, 7}, {4, 21}, {6, 7}}));
  for (unsigned N = 1; N <= 14; ++N)
    for (int k = -int(N); k <= int(N); k += 2) {
      const auto p = walk_weight_polynomial(N, k);
      ASSERT_EQ(p.path_count(), binomial(N, (N + k) / 2));
      ASSERT_NEAR(p.weight(0.5) * std::exp2(N), to_double(binomial(N, (N + k) / 2)), 1e-9);
    }
  try {
    walk_weight_polynomial(5, 2);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidDisplacement);
  }
  EXPECT_THROW(walk_weight_polynomial(3, 5), DomainError);
}

TEST(Walk, PathEnumeration) {
  // every right/left path of length N with displacement k; a step that reverses
  // the previous one (cyclically) weighs alpha, a repeat weighs beta
  for (unsigned N = 1; N <= 12; ++N)
    for (int k = -int(N); k <= int(N); k += 2)
      for (double alpha : {0.3, 0.5, 0.8}) {
        double ref = 0;
        for (Word w = 0; w < (Word(1) << N); ++w) {
          if (2 * std::popcount(w) - int(N) != k) continue;
          unsigned changes = 0;
          for (unsigned i = 0; i < N; ++i) changes += ((w >> i) & 1) != ((w >> ((i + 1) % N)) & 1);
          ref += std::pow(alpha, changes) * std::pow(1 - alpha, N - changes);
        }
        ASSERT_NEAR(walk_weight_polynomial(N, k).weight(alpha), ref, 1e-12);
      }
  EXPECT_NEAR(walk_weight_polynomial(4, 0).weight(0.3), 4 * 0.09 * 0.49 + 2 * 0.0081, 1e-12);
}
