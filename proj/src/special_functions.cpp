#include "lenstorsion/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "lenstorsion/errors.hpp"

namespace lenstorsion {

namespace {

using cplx = std::complex<double>;

// Exact Bernoulli numbers over Q, built at compile time.
using i128 = __int128;

constexpr i128 abs128(i128 x) { return x < 0 ? -x : x; }

constexpr i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Fraction {
  i128 num = 0;
  i128 den = 1;
};

constexpr Fraction reduced(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

constexpr Fraction operator+(Fraction a, Fraction b) {
  const i128 g = gcd128(a.den, b.den);
  const i128 l = a.den / g * b.den;
  return reduced(a.num * (l / a.den) + b.num * (l / b.den), l);
}

constexpr int kMaxBernoulli = 32;

// sum_{k=0}^{m} C(m+1, k) B_k = 0
constexpr std::array<Fraction, kMaxBernoulli + 1> make_bernoulli_table() {
  std::array<Fraction, kMaxBernoulli + 1> b{};
  b[0] = {1, 1};
  for (int m = 1; m <= kMaxBernoulli; ++m) {
    Fraction acc{0, 1};
    i128 binom = 1;
    for (int k = 0; k < m; ++k) {
      acc = acc + reduced(b[k].num * binom, b[k].den);
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[m] = reduced(-acc.num, acc.den * (m + 1));
  }
  return b;
}

constexpr auto kBernoulli = make_bernoulli_table();

static_assert(kBernoulli[1].num == -1 && kBernoulli[1].den == 2);
static_assert(kBernoulli[2].num == 1 && kBernoulli[2].den == 6);
static_assert(kBernoulli[12].num == -691 && kBernoulli[12].den == 2730);
static_assert(kBernoulli[30].num == 8615841276005 && kBernoulli[30].den == 14322);
static_assert(kBernoulli[32].num == -7709321041217 && kBernoulli[32].den == 510);

// Euler-Maclaurin uses B_2 .. B_{2M}; B_{2M+2} bounds the remainder.
constexpr int kCorrectionTerms = 15;
static_assert(2 * kCorrectionTerms + 2 <= kMaxBernoulli);

constexpr int kMinLeadingTerms = 32;

// B_{2j} / (2j)!
const std::array<double, kCorrectionTerms + 2>& correction_coefficients() {
  static const std::array<double, kCorrectionTerms + 2> table = [] {
    std::array<double, kCorrectionTerms + 2> c{};
    long double factorial = 1.0L;
    for (int j = 1; j <= kCorrectionTerms + 1; ++j) {
      factorial *= static_cast<long double>(2 * j - 1) * static_cast<long double>(2 * j);
      const Fraction& b = kBernoulli[2 * j];
      c[j] = static_cast<double>(static_cast<long double>(b.num) /
                                 static_cast<long double>(b.den) / factorial);
    }
    return c;
  }();
  return table;
}

void check_arguments(cplx s, double a) {
  if (!(a > 0.0 && a <= 1.0)) {
    throw DomainError("hurwitz zeta: second argument must lie in (0, 1], got " +
                      std::to_string(a));
  }
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw DomainError("hurwitz zeta: non-finite s");
  }
  if (std::abs(s - 1.0) < 1e-9) {
    throw PoleError("hurwitz zeta: s is within 1e-9 of the pole at s = 1");
  }
}

struct Expansion {
  cplx value;
  cplx deriv;
  double value_err = 0.0;
  double deriv_err = 0.0;
};

Expansion euler_maclaurin(cplx s, double a) {
  check_arguments(s, a);
  const auto& coeff = correction_coefficients();
  const int leading = kMinLeadingTerms + static_cast<int>(std::ceil(std::abs(s)));

  Expansion out;
  for (int k = leading - 1; k >= 0; --k) {
    const double lx = std::log(k + a);
    const cplx p = std::exp(-s * lx);
    out.value += p;
    out.deriv -= lx * p;
  }

  const double x = leading + a;
  const double lx = std::log(x);
  const cplx xs = std::exp(-s * lx);  // x^{-s}
  const cplx sm1 = s - 1.0;

  out.value += x * xs / sm1 + 0.5 * xs;
  out.deriv += -lx * x * xs / sm1 - x * xs / (sm1 * sm1) - 0.5 * lx * xs;

  // Rising factorial (s)_{2j-1} and its s-derivative.
  cplx poch = s;
  cplx dpoch = 1.0;
  cplx xpow = xs / x;  // x^{-s-2j+1}
  const double inv_x2 = 1.0 / (x * x);
  for (int j = 1; j <= kCorrectionTerms; ++j) {
    out.value += coeff[j] * poch * xpow;
    out.deriv += coeff[j] * (dpoch - lx * poch) * xpow;
    for (int m : {2 * j - 1, 2 * j}) {
      dpoch = dpoch * (s + static_cast<double>(m)) + poch;
      poch *= s + static_cast<double>(m);
    }
    xpow *= inv_x2;
  }

  const int m = kCorrectionTerms + 1;
  const double omitted = std::abs(coeff[m] * poch * xpow);
  const double omitted_deriv = std::abs(coeff[m] * (dpoch - lx * poch) * xpow);
  const double factor = std::abs(s + static_cast<double>(2 * m - 1)) /
                        std::max(s.real() + static_cast<double>(2 * m - 1), 1.0);
  out.value_err = omitted * factor;
  out.deriv_err = (omitted_deriv + omitted) * factor;
  return out;
}

}  // namespace

double bernoulli(int k) {
  if (k < 0 || k > kMaxBernoulli) {
    throw DomainError("bernoulli: index out of tabulated range");
  }
  return static_cast<double>(static_cast<long double>(kBernoulli[k].num) /
                             static_cast<long double>(kBernoulli[k].den));
}

ZetaValue hurwitz_zeta(std::complex<double> s, double a) {
  const Expansion e = euler_maclaurin(s, a);
  return {e.value, e.value_err};
}

ZetaValue hurwitz_zeta_ds(std::complex<double> s, double a) {
  const Expansion e = euler_maclaurin(s, a);
  return {e.deriv, e.deriv_err};
}

ZetaValue riemann_zeta(std::complex<double> s) { return hurwitz_zeta(s, 1.0); }

ZetaValue riemann_zeta_ds(std::complex<double> s) { return hurwitz_zeta_ds(s, 1.0); }

double log_gamma(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("log_gamma: argument must be positive and finite");
  }
  int sign = 0;
  return ::lgamma_r(a, &sign);
}

}  // namespace lenstorsion
