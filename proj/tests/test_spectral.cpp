#include <cmath>
#include <cstdlib>
#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "lenstorsion/errors.hpp"
#include "lenstorsion/sampling.hpp"
#include "lenstorsion/special_functions.hpp"
#include "lenstorsion/spectral.hpp"
#include "lenstorsion/torsion.hpp"
#include "oracles.hpp"

using namespace lenstorsion;

namespace {

double eigenvalue_oracle(int n, int q, int j, int i, int p) {
  const double num = static_cast<double>((p + i) * (q + n - i) + (q + j) * (p + n - j));
  const double den = 2.0 * (n - i - j);
  return (num / den) * (num / den);
}

double as_double(const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

using BlockKey = std::tuple<BlockCase, int, int, int, int>;

std::multiset<BlockKey> keys_of(const std::vector<SpectralBlock>& blocks) {
  std::multiset<BlockKey> out;
  for (const auto& b : blocks) out.insert({b.kind, b.q, b.j, b.i, b.p});
  return out;
}

// kappa restricted to a set of cases, summed serially over enumerate_blocks.
double serial_kappa(const LensSpace& lens, std::int64_t u, double s, int pmax, int qmax, CaseMask cases) {
  const int n = lens.n();
  double total = 0.0;
  for (const SpectralBlock& b : enumerate_blocks(lens, pmax, qmax)) {
    if (!cases.contains(b.kind)) continue;
    for (int k = 0; k <= n; ++k) {
      const double coef = ((k % 2 == 0) ? -1.0 : 1.0) * (n + 1 - k);
      const std::int64_t mult = block_multiplicity(b, lens, u, k);
      if (mult == 0) continue;
      if (b.kind == BlockCase::I) {
        total -= static_cast<double>((n + 1) * mult);
      } else {
        total += coef * static_cast<double>(mult) * std::pow(as_double(b.eigenvalue), -s);
      }
    }
  }
  return total;
}

}  // namespace

TEST(Eigenvalue, Examples) {
  EXPECT_EQ(eigenvalue(1, 1, 0, 0, 1), Rational(4));
  EXPECT_EQ(eigenvalue(1, -1, 0, 0, 1), Rational(1));
  EXPECT_EQ(eigenvalue(3, 0, 0, 0, 0), Rational(0));
  EXPECT_EQ(eigenvalue(2, 1, 0, 0, 0), Rational(1, 4));
  EXPECT_EQ(eigenvalue(2, 2, 1, 0, 3), Rational(144));
  EXPECT_THROW(eigenvalue(2, 1, 1, 1, 1), DomainError);
}

TEST(EigenvalueProperty, MatchesFormulaAndPositive) {
  for (int n = 1; n <= 4; ++n) {
    for_each_block(n, 6, 6, [&](const SpectralBlock& b) {
      EXPECT_NEAR(as_double(b.eigenvalue), eigenvalue_oracle(n, b.q, b.j, b.i, b.p), 1e-9);
      if (b.kind == BlockCase::I) {
        EXPECT_EQ(b.eigenvalue, Rational(0));
      } else {
        EXPECT_GT(b.eigenvalue, Rational(0)) << to_string(b.kind);
      }
    });
  }
}

TEST(EnumerateBlocks, CircleQuotientSmallest) {
  // For n = 1 the functions V(0, -p) and V(q, 0) form the i = 0 and j = 0 members of Cases III and IV.
  const auto blocks = enumerate_blocks(LensSpace::sphere(1), 1, 1);
  const std::multiset<BlockKey> expected = {
      {BlockCase::I, 0, 0, 0, 0},   {BlockCase::III, 0, 0, 0, 1}, {BlockCase::IV, 1, 0, 0, 0},
      {BlockCase::V, 1, 0, 0, 1},   {BlockCase::VI, -1, 0, 0, 1}, {BlockCase::VII, 1, 0, 0, -1}};
  EXPECT_EQ(keys_of(blocks), expected);
}

TEST(EnumerateBlocks, TwoDimensionalSmallest) {
  const auto blocks = enumerate_blocks(LensSpace::sphere(2), 1, 1);
  std::set<int> case3_i;
  std::set<int> case4_j;
  for (const auto& b : blocks) {
    if (b.kind == BlockCase::III) {
      EXPECT_EQ(b.p, 1);
      case3_i.insert(b.i);
    }
    if (b.kind == BlockCase::IV) {
      EXPECT_EQ(b.q, 1);
      case4_j.insert(b.j);
    }
  }
  EXPECT_EQ(case3_i, (std::set<int>{0, 1}));
  EXPECT_EQ(case4_j, (std::set<int>{0, 1}));
}

TEST(EnumerateBlocks, CountsAndNoDuplicates) {
  for (int n = 1; n <= 4; ++n) {
    for (int pmax : {1, 3, 5}) {
      const int qmax = pmax + 1;
      const auto blocks = enumerate_blocks(LensSpace::sphere(n), pmax, qmax);
      const auto keys = keys_of(blocks);
      EXPECT_EQ(std::set<BlockKey>(keys.begin(), keys.end()).size(), blocks.size());
      const std::size_t case2 = static_cast<std::size_t>(n * (n - 1) / 2 * pmax * qmax);
      const std::size_t expected = 1 + case2 + static_cast<std::size_t>(n * pmax + n * qmax + n * pmax * qmax + pmax + qmax);
      EXPECT_EQ(blocks.size(), expected) << "n = " << n;
    }
  }
}

TEST(EnumerateBlocks, BidegreesAndWeights) {
  const int n = 3;
  for (const auto& b : enumerate_blocks(LensSpace::sphere(n), 2, 2)) {
    EXPECT_EQ(b.weight, HighestWeight::family(n, b.q, b.j, b.i, b.p));
    for (const auto& bd : b.bidegrees) EXPECT_LE(bd.s + bd.t, n);
    if (b.kind == BlockCase::II) {
      EXPECT_EQ(b.bidegrees, (std::vector<Bidegree>{{b.i, b.j}, {b.i + 1, b.j}, {b.i, b.j + 1}, {b.i + 1, b.j + 1}}));
    }
    if (b.kind == BlockCase::VI) EXPECT_EQ(b.bidegrees, (std::vector<Bidegree>{{n, 0}}));
  }
  EXPECT_THROW(make_block(n, BlockCase::II, 1, 1, 1, 1), DomainError);
  EXPECT_THROW(make_block(n, BlockCase::VI, 0, 0, n - 1, 1), DomainError);
  EXPECT_NO_THROW(make_block(n, BlockCase::VI, -1, 0, n - 1, 1));
}

TEST(BlockMultiplicity, Examples) {
  const LensSpace sphere = LensSpace::sphere(2);
  const SpectralBlock b = make_block(2, BlockCase::II, 2, 0, 0, 1);
  EXPECT_EQ(block_multiplicity(b, sphere, 0, 1), 2 * oracle::weyl_dimension({2, 0, -1}));

  const LensSpace lens(2, 3, {1, 1, 2});
  const SpectralBlock harmonic = make_block(2, BlockCase::I, 0, 0, 0, 0);
  EXPECT_EQ(block_multiplicity(harmonic, lens, 0, 0), 1);
  EXPECT_EQ(block_multiplicity(harmonic, lens, 1, 0), 0);
  EXPECT_EQ(block_multiplicity(harmonic, lens, 0, 1), 0);

  const LensSpace z2(1, 2, {1, 1});
  const SpectralBlock v = make_block(1, BlockCase::V, 1, 0, 0, 1);
  // V(1, -1) on C^2: weights (1,-1), (0,0) twice, (-1,1); all pair to 0 mod 2.
  EXPECT_EQ(block_multiplicity(v, z2, 0, 0), 3);
  EXPECT_EQ(block_multiplicity(v, z2, 1, 0), 0);
  EXPECT_EQ(block_multiplicity(v, z2, 0, 1), 6);
  EXPECT_THROW(block_multiplicity(v, z2, 0, 2), DomainError);
}

TEST(KappaDirect, SphereAgainstRiemannZeta) {
  const KappaDirect d = kappa_direct(LensSpace::sphere(1), 0, 3.0, 64, 64);
  const double expected = -2.0 * (1.0 + std::pow(2.0, 7) * riemann_zeta(6.0).value.real());
  EXPECT_LE(std::abs(d.value - expected), d.tail + 1e-8);
  EXPECT_TRUE(d.converged);
}

TEST(KappaDirect, QuotientAgainstClosedForm) {
  const LensSpace lens(1, 5, {1, 2});
  const KappaDirect d = kappa_direct(lens, 1, 3.0, 64, 64);
  EXPECT_LE(std::abs(d.value - kappa_closed(lens, 1, 3.0).value.real()), d.tail + 1e-8);
}

TEST(KappaDirect, MatchesSerialSum) {
  const LensSpace lens(2, 3, {1, 2, 2});
  for (std::int64_t u = 0; u < 3; ++u) {
    const KappaDirect d = kappa_direct(lens, u, 4.0, 16, 16);
    EXPECT_NEAR(d.value, serial_kappa(lens, u, 4.0, 16, 16, CaseMask::all()), 1e-10 * std::abs(d.value));
  }
}

TEST(KappaDirect, DoublingTruncationStaysWithinTail) {
  SplitMix64 rng(21);
  for (int n = 1; n <= 2; ++n) {
    const std::int64_t mu = rng.uniform_int(2, 6);
    const LensSpace lens(n, mu, sample_coprime_weights(rng, n, mu));
    for (std::int64_t u = 0; u < mu; ++u) {
      const KappaDirect coarse = kappa_direct(lens, u, n + 2.0, 24, 24);
      const KappaDirect fine = kappa_direct(lens, u, n + 2.0, 48, 48);
      EXPECT_LE(std::abs(fine.value - coarse.value), coarse.tail) << "n = " << n << ", u = " << u;
    }
  }
}

TEST(KappaDirect, OracleAgainstClosedForm) {
  SplitMix64 rng(22);
  for (int n = 1; n <= 3; ++n) {
    for (std::int64_t mu : {1, 2, 4, 7}) {
      const LensSpace lens(n, mu, sample_coprime_weights(rng, n, mu));
      for (double s : {n + 2.0, n + 3.0}) {
        const auto all = kappa_direct_all(lens, s, 48, 48);
        for (std::int64_t u = 0; u < mu; ++u) {
          const double closed = kappa_closed(lens, u, s).value.real();
          EXPECT_LE(std::abs(all[static_cast<std::size_t>(u)].value - closed), all[static_cast<std::size_t>(u)].tail + 1e-8)
              << "n = " << n << ", mu = " << mu << ", u = " << u << ", s = " << s;
        }
      }
    }
  }
}

TEST(KappaDirect, DualPartialSums) {
  SplitMix64 rng(23);
  for (int n = 1; n <= 2; ++n) {
    const std::int64_t mu = 5;
    const LensSpace lens(n, mu, sample_coprime_weights(rng, n, mu));
    const double s = n + 3.0;
    for (std::int64_t u = 1; u < mu; ++u) {
      const KappaDirectOptions neg{{BlockCase::III, BlockCase::VI}, 0};
      const KappaDirectOptions pos{{BlockCase::IV, BlockCase::VII}, 0};
      const KappaDirect a = kappa_direct(lens, u, s, 64, 64, neg);
      const KappaDirect b = kappa_direct(lens, mu - u, s, 64, 64, pos);
      EXPECT_LE(std::abs(a.value - b.value), a.tail + b.tail + 1e-12);

      // Each half is one of the two Hurwitz sums in the closed form.
      double hurwitz = 0.0;
      for (auto tau : lens.tau()) hurwitz += hurwitz_zeta(2 * s, positive_residue(u * tau, mu) / double(mu)).value.real();
      const double expected = -std::pow(2.0 / mu, 2 * s) * hurwitz;
      EXPECT_LE(std::abs(a.value - expected), a.tail + 1e-10) << "u = " << u;
    }
  }
}

TEST(KappaDirect, CasesTwoAndFiveCancel) {
  const LensSpace lens(2, 4, {1, 3, 1});
  for (std::int64_t u = 0; u < 4; ++u) {
    // Exact in the coefficients; the floating sum cancels up to rounding of the tail-sized terms.
    const KappaDirect d = kappa_direct(lens, u, 5.0, 32, 32, {{BlockCase::II, BlockCase::V}, 0});
    EXPECT_LE(std::abs(d.value), 1e-14 * std::max(1.0, d.tail) + 1e-13);
  }
}

TEST(KappaDirect, ThreadCountDoesNotChangeBits) {
  const LensSpace lens(2, 5, {1, 2, 3});
  const auto one = kappa_direct_all(lens, 5.0, 40, 40, {CaseMask::all(), 1});
  const auto four = kappa_direct_all(lens, 5.0, 40, 40, {CaseMask::all(), 4});
  const auto seven = kappa_direct_all(lens, 5.0, 40, 40, {CaseMask::all(), 7});
  for (std::size_t u = 0; u < one.size(); ++u) {
    EXPECT_EQ(one[u].value, four[u].value);
    EXPECT_EQ(one[u].value, seven[u].value);
    EXPECT_EQ(one[u].tail, seven[u].tail);
  }
}

TEST(KappaDirect, ConvergedFlag) {
  const LensSpace lens(1, 3, {1, 2});
  for (int cut : {16, 32}) {
    const KappaDirect d = kappa_direct(lens, 1, 3.0, cut, cut);
    EXPECT_EQ(d.converged, d.tail <= 1e-4 * std::abs(d.value));
    EXPECT_GT(d.tail, 0.0);
  }
}

TEST(KappaDirect, IntegralityBookkeeping) {
  const LensSpace lens(2, 8, {1, 3, 5});
  const auto all = kappa_direct_all(lens, 5.0, 32, 32);
  for (const auto& d : all) {
    EXPECT_LE(d.max_integrality_defect, kIntegralityTolerance);
    EXPECT_GT(d.weights_checked, 0);
  }
}

TEST(KappaDirect, Preconditions) {
  const LensSpace lens = LensSpace::sphere(2);
  EXPECT_THROW(kappa_direct(lens, 0, 3.5, 32, 32), DomainError);
  EXPECT_THROW(kappa_direct(lens, 0, 4.0, 15, 32), DomainError);
  EXPECT_NO_THROW(kappa_direct(lens, 0, 4.0, 16, 16));
}

TEST(KappaDirect, ThreadEnvironmentCap) {
  ::setenv("TORSION_THREADS", "1", 1);
  EXPECT_EQ(default_thread_count(), 1u);
  ::unsetenv("TORSION_THREADS");
  EXPECT_GE(default_thread_count(), 1u);
}

TEST(Cancellation, AllSmallDimensions) {
  for (int n = 1; n <= 16; ++n) EXPECT_TRUE(check_cancellation(n)) << "n = " << n;
  EXPECT_THROW(check_cancellation(0), DomainError);
}
