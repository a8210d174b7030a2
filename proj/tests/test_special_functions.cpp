#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "lenstorsion/errors.hpp"
#include "lenstorsion/sampling.hpp"
#include "lenstorsion/special_functions.hpp"
#include "oracles.hpp"

using namespace lenstorsion;
using std::numbers::pi;

namespace {

const double kHalfLog2Pi = 0.5 * std::log(2.0 * pi);

double zeta_real(double s, double a) { return hurwitz_zeta(s, a).value.real(); }

}  // namespace

TEST(Bernoulli, KnownValues) {
  EXPECT_DOUBLE_EQ(bernoulli(0), 1.0);
  EXPECT_DOUBLE_EQ(bernoulli(1), -0.5);
  EXPECT_DOUBLE_EQ(bernoulli(2), 1.0 / 6.0);
  EXPECT_DOUBLE_EQ(bernoulli(3), 0.0);
  EXPECT_DOUBLE_EQ(bernoulli(4), -1.0 / 30.0);
  EXPECT_DOUBLE_EQ(bernoulli(12), -691.0 / 2730.0);
  EXPECT_DOUBLE_EQ(bernoulli(30), 8615841276005.0 / 14322.0);
}

TEST(RiemannZeta, ValueAtZero) {
  const ZetaValue z = riemann_zeta(0.0);
  EXPECT_NEAR(z.value.real(), -0.5, 1e-12);
  EXPECT_NEAR(z.value.imag(), 0.0, 1e-12);
}

TEST(RiemannZeta, DerivativeAtZero) {
  EXPECT_NEAR(riemann_zeta_ds(0.0).value.real(), -kHalfLog2Pi, 1e-12);
}

TEST(RiemannZeta, DerivativeMatchesHurwitzAtOne) {
  EXPECT_EQ(riemann_zeta_ds(0.0).value, hurwitz_zeta_ds(0.0, 1.0).value);
  EXPECT_EQ(riemann_zeta(2.5).value, hurwitz_zeta(2.5, 1.0).value);
}

TEST(RiemannZeta, TwoAgainstDirectSum) {
  const ZetaValue z = riemann_zeta(2.0);
  EXPECT_NEAR(z.value.real(), pi * pi / 6.0, 1e-12);
  const auto direct = oracle::hurwitz_direct(2.0, 1.0);
  EXPECT_NEAR(z.value.real(), direct.value, z.err + direct.bound + 1e-14);
}

TEST(RiemannZeta, MinusOneByFunctionalEquation) {
  // zeta(-1) = 2 (2 pi)^{-2} sin(-pi/2) Gamma(2) zeta(2), with zeta(2) from direct summation.
  const auto zeta2 = oracle::hurwitz_direct(2.0, 1.0);
  const double reflected = 2.0 * std::pow(2.0 * pi, -2.0) * std::sin(-pi / 2.0) * zeta2.value;
  EXPECT_NEAR(riemann_zeta(-1.0).value.real(), reflected, 1e-12);
  EXPECT_NEAR(riemann_zeta(-1.0).value.real(), -1.0 / 12.0, 1e-12);
}

TEST(RiemannZeta, DerivativeAtTwoByFiniteDifference) {
  const double h = 1e-5;
  const double fd = (riemann_zeta(2.0 + h).value.real() - riemann_zeta(2.0 - h).value.real()) / (2 * h);
  EXPECT_NEAR(riemann_zeta_ds(2.0).value.real(), fd, 1e-6);
}

TEST(HurwitzZeta, HalfAtZeroVanishes) { EXPECT_NEAR(zeta_real(0.0, 0.5), 0.0, 1e-12); }

TEST(HurwitzZeta, DerivativeAtHalf) {
  EXPECT_NEAR(hurwitz_zeta_ds(0.0, 0.5).value.real(), -0.5 * std::log(2.0), 1e-12);
}

TEST(HurwitzZeta, DerivativeAtQuarterAgainstStirling) {
  EXPECT_NEAR(hurwitz_zeta_ds(0.0, 0.25).value.real(), oracle::log_gamma_stirling(0.25) - kHalfLog2Pi, 1e-10);
}

TEST(HurwitzZeta, ThreeQuarterAgainstDirectSum) {
  const ZetaValue z = hurwitz_zeta(3.0, 0.25);
  const auto direct = oracle::hurwitz_direct(3.0, 0.25);
  EXPECT_NEAR(z.value.real(), direct.value, z.err + direct.bound + 1e-13);
}

TEST(HurwitzZeta, PoleAtOne) {
  EXPECT_THROW(hurwitz_zeta(1.0, 0.5), PoleError);
  EXPECT_THROW(hurwitz_zeta(1.0 + 1e-10, 0.5), PoleError);
  EXPECT_THROW(hurwitz_zeta_ds(1.0, 0.5), PoleError);
  EXPECT_THROW(riemann_zeta(std::complex<double>(1.0, 5e-10)), PoleError);
  EXPECT_NO_THROW(hurwitz_zeta(1.0 + 1e-6, 0.5));
}

TEST(HurwitzZeta, DomainOfA) {
  EXPECT_THROW(hurwitz_zeta(2.0, 0.0), DomainError);
  EXPECT_THROW(hurwitz_zeta(2.0, -0.25), DomainError);
  EXPECT_THROW(hurwitz_zeta(2.0, 1.5), DomainError);
  EXPECT_THROW(hurwitz_zeta_ds(0.0, 1.0000001), DomainError);
  EXPECT_NO_THROW(hurwitz_zeta(2.0, 1.0));
}

TEST(HurwitzZeta, ErrorBoundSmallOnDisc) {
  const std::complex<double> points[] = {-20.0, -10.5, -1.0, 0.0, 0.5, 2.0, 7.3, 20.0,
                                         {3.0, 4.0}, {0.0, 10.0}, {-12.0, 15.0}, {0.5, -19.9}};
  for (const auto s : points) {
    for (double a : {1.0 / 64, 0.1, 0.5, 0.9, 1.0}) {
      const ZetaValue v = hurwitz_zeta(s, a);
      const ZetaValue d = hurwitz_zeta_ds(s, a);
      EXPECT_TRUE(std::isfinite(v.err) && v.err >= 0.0);
      EXPECT_LE(v.err, 1e-12) << "s = " << s << ", a = " << a;
      EXPECT_LE(d.err, 1e-12) << "s = " << s << ", a = " << a;
    }
  }
}

TEST(HurwitzZeta, RealInputGivesRealOutput) {
  for (double s : {-3.5, 0.0, 0.25, 4.0}) {
    for (double a : {0.2, 0.7, 1.0}) {
      const ZetaValue v = hurwitz_zeta(s, a);
      EXPECT_LE(std::abs(v.value.imag()), v.err + 1e-300);
    }
  }
}

TEST(HurwitzZetaProperty, PairingAtZero) {
  SplitMix64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const double a = 1e-6 + (1.0 - 2e-6) * rng.uniform_unit();
    EXPECT_LE(std::abs(zeta_real(0.0, a) + zeta_real(0.0, 1.0 - a)), 1e-10) << "a = " << a;
  }
}

TEST(HurwitzZetaProperty, DerivativePairingAndLerchOnGrid) {
  for (int k = 1; k <= 63; ++k) {
    const double a = k / 64.0;
    const double da = hurwitz_zeta_ds(0.0, a).value.real();
    const double db = hurwitz_zeta_ds(0.0, 1.0 - a).value.real();
    EXPECT_LE(std::abs(da + db + std::log(std::abs(std::polar(1.0, 2 * pi * a) - 1.0))), 1e-9) << "a = " << a;
    EXPECT_LE(std::abs(da - (log_gamma(a) - kHalfLog2Pi)), 1e-10) << "a = " << a;
    EXPECT_LE(std::abs(da - (oracle::log_gamma_stirling(a) - kHalfLog2Pi)), 1e-10) << "a = " << a;
  }
}

TEST(HurwitzZetaProperty, SeriesConsistency) {
  SplitMix64 rng(5);
  for (double s : {2.0, 2.5, 3.0, 4.0, 6.0}) {
    const double a = 0.05 + 0.95 * rng.uniform_unit();
    const ZetaValue z = hurwitz_zeta(s, a);
    const auto direct = oracle::hurwitz_direct(s, a, 500'000);
    EXPECT_NEAR(z.value.real(), direct.value, z.err + direct.bound + 1e-13) << "s = " << s << ", a = " << a;
  }
}

TEST(HurwitzZetaProperty, DerivativeByFiniteDifference) {
  const double h = 1e-5;
  for (double s : {0.0, 2.0, 3.0}) {
    for (double a : {0.125, 0.3, 0.5, 0.8, 1.0}) {
      const double fd = (zeta_real(s + h, a) - zeta_real(s - h, a)) / (2 * h);
      EXPECT_LE(std::abs(hurwitz_zeta_ds(s, a).value.real() - fd), 1e-5) << "s = " << s << ", a = " << a;
    }
  }
}

TEST(LogGamma, Examples) {
  EXPECT_NEAR(log_gamma(1.0), 0.0, 1e-15);
  EXPECT_NEAR(log_gamma(0.5), 0.5 * std::log(pi), 1e-14);
  EXPECT_NEAR(log_gamma(5.0), std::log(24.0), 1e-14);
}

TEST(LogGamma, AgainstStirlingOnRange) {
  for (int k = 1; k <= 400; ++k) {
    const double a = k / 8.0;
    EXPECT_NEAR(log_gamma(a), oracle::log_gamma_stirling(a), 1e-12) << "a = " << a;
  }
}

TEST(LogGamma, Domain) {
  EXPECT_THROW(log_gamma(0.0), DomainError);
  EXPECT_THROW(log_gamma(-1.5), DomainError);
}
