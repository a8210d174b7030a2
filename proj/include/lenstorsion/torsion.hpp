#pragma once

#include <complex>
#include <cstdint>

#include "lenstorsion/lens_space.hpp"
#include "lenstorsion/special_functions.hpp"

namespace lenstorsion {

/// n! for 0 <= n <= 20, exact.
std::int64_t factorial(int n);

/// Contact analytic torsion function of the flat line bundle E_u (metric g_{theta,J}):
///   u == 0:  -(n+1) (1 + 2^{2s+1} mu^{-2s} zeta(2s))
///   u != 0:  -2^{2s} mu^{-2s} sum_j (zeta(2s, A(u tau_j)/mu) + zeta(2s, A(-u tau_j)/mu))
/// where A(w) is the residue of w in {1, ..., mu}. Throws PoleError near s = 1/2.
ZetaValue kappa_closed(const LensSpace& lens, std::int64_t u, std::complex<double> s);

/// d/ds kappa_closed at s = 0, assembled from zeta(0, a) and zeta'(0, a).
double kappa_prime0(const LensSpace& lens, std::int64_t u);

/// Per-summand closed forms: (4 pi / mu)^{n+1} for u == 0 and
/// prod_j |exp(2 pi i u tau_j / mu) - 1| otherwise.
double contact_torsion_closed(const LensSpace& lens, std::int64_t u);

/// Contact analytic torsion of E_alpha, the product over its rank-one summands.
/// Cross-checked against exp(sum kappa_prime0 / 2); throws ConsistencyError when the two
/// differ by more than 1e-9 relative.
double contact_torsion(const LensSpace& lens, const FlatBundle& bundle);

/// Ray-Singer torsion for the metric 4 g_std: (4 pi)^{n+1} / (n! mu^{n+1}) for each trivial
/// summand and prod_j |exp(2 pi i u tau_j / mu) - 1| for each nontrivial one.
double ray_singer_torsion(const LensSpace& lens, const FlatBundle& bundle);

/// Ray-Singer torsion of the round sphere S^{2n+1} with g_std: 2 pi^{n+1} / n!.
double weng_you_sphere(int n);

/// Derivatives at s = 0 of the two pieces of the Ray-Singer zeta function of the trivial
/// bundle on K with g_std: the group average of the twisted piece, from
/// -2(n+1) mu^{-2s} zeta(2s), and the untwisted piece, recovered from the sphere value.
struct RaySingerEndpoints {
  double twisted_average_prime0 = 0.0;  // 2 (n+1) log(2 pi / mu)
  double untwisted_prime0 = 0.0;        // 2 log(2^{-n} / n!)

  double sum() const { return twisted_average_prime0 + untwisted_prime0; }
};

RaySingerEndpoints ray_singer_endpoints(const LensSpace& lens);

/// Number of trivial summands of the bundle, i.e. dim H^0(K, E_alpha).
int dim_h0(const FlatBundle& bundle);

struct TorsionReport {
  double kappa0 = 0.0;
  double kappa_prime0 = 0.0;
  double contact = 0.0;      // exp(kappa_prime0 / 2)
  double ray_singer = 0.0;
  int dim_h0 = 0;
  double ratio_check = 0.0;  // contact / (n!^{dim_h0} ray_singer)
};

TorsionReport torsion_report(const LensSpace& lens, const FlatBundle& bundle);

}  // namespace lenstorsion
