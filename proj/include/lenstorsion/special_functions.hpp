#pragma once

#include <complex>

namespace lenstorsion {

/// A function value together with an absolute bound on its truncation error.
/// Rounding error is not included in `err`.
struct ZetaValue {
  std::complex<double> value;
  double err = 0.0;
};

/// Bernoulli number B_k as a double, for 0 <= k <= 32 (B_1 = -1/2).
/// The table is computed exactly over the rationals at compile time.
double bernoulli(int k);

/// Analytic continuation of sum_{q>=0} (q+a)^{-s} for 0 < a <= 1 and s != 1.
///
/// Euler-Maclaurin summation with N explicit leading terms (N grows with |s|,
/// at least 32) and Bernoulli corrections through B_30. The error field is the
/// standard remainder bound based on the first omitted correction term.
///
/// Throws PoleError if |s - 1| < 1e-9 and DomainError if a is not in (0, 1].
ZetaValue hurwitz_zeta(std::complex<double> s, double a);

/// d/ds zeta(s, a), by differentiating the Euler-Maclaurin expansion term by term.
ZetaValue hurwitz_zeta_ds(std::complex<double> s, double a);

/// Riemann zeta, i.e. hurwitz_zeta(s, 1).
ZetaValue riemann_zeta(std::complex<double> s);
ZetaValue riemann_zeta_ds(std::complex<double> s);

/// ln Gamma(a) for a > 0. Throws DomainError otherwise.
double log_gamma(double a);

}  // namespace lenstorsion
