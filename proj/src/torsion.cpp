#include "lenstorsion/torsion.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lenstorsion/errors.hpp"

namespace lenstorsion {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// |exp(2 pi i w / mu) - 1| for w != 0 mod mu.
double chord(std::int64_t w, std::int64_t mu) {
  const auto r = static_cast<double>(reduce_mod(w, mu));
  return 2.0 * std::sin(kPi * r / static_cast<double>(mu));
}

// Hurwitz parameters A(u tau_j)/mu and A(-u tau_j)/mu, in order j = 1..n+1.
struct HurwitzPair {
  double plus;
  double minus;
};

std::vector<HurwitzPair> hurwitz_parameters(const LensSpace& lens, std::int64_t u) {
  const std::int64_t mu = lens.mu();
  std::vector<HurwitzPair> out;
  out.reserve(lens.tau().size());
  for (std::int64_t tau : lens.tau()) {
    const std::int64_t w = reduce_mod(u, mu) * tau;
    out.push_back({static_cast<double>(positive_residue(w, mu)) / static_cast<double>(mu),
                   static_cast<double>(positive_residue(-w, mu)) / static_cast<double>(mu)});
  }
  return out;
}

// d/ds at s = 0 of -2(n+1) mu^{-2s} zeta(2s).
double twisted_average_prime0(int n, std::int64_t mu) {
  const double z0 = riemann_zeta(0.0).value.real();
  const double dz0 = riemann_zeta_ds(0.0).value.real();
  return -2.0 * (n + 1) * (-2.0 * std::log(static_cast<double>(mu)) * z0 + 2.0 * dz0);
}

}  // namespace

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw DomainError("factorial: n must lie in [0, 20]");
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

ZetaValue kappa_closed(const LensSpace& lens, std::int64_t u, std::complex<double> s) {
  if (std::abs(2.0 * s - 1.0) < 1e-9) {
    throw PoleError("kappa: zeta(2s) has a pole at s = 1/2");
  }
  const int n = lens.n();
  const double log_scale = std::log(2.0 / static_cast<double>(lens.mu()));
  const cplx scale = std::exp(2.0 * s * log_scale);  // 2^{2s} mu^{-2s}

  if (reduce_mod(u, lens.mu()) == 0) {
    const ZetaValue z = riemann_zeta(2.0 * s);
    const cplx value = -static_cast<double>(n + 1) * (1.0 + 2.0 * scale * z.value);
    return {value, static_cast<double>(n + 1) * 2.0 * std::abs(scale) * z.err};
  }

  cplx sum{0.0, 0.0};
  double err = 0.0;
  for (const HurwitzPair& h : hurwitz_parameters(lens, u)) {
    const ZetaValue a = hurwitz_zeta(2.0 * s, h.plus);
    const ZetaValue b = hurwitz_zeta(2.0 * s, h.minus);
    sum += a.value + b.value;
    err += a.err + b.err;
  }
  return {-scale * sum, std::abs(scale) * err};
}

double kappa_prime0(const LensSpace& lens, std::int64_t u) {
  const int n = lens.n();
  const double log_scale = std::log(2.0 / static_cast<double>(lens.mu()));

  if (reduce_mod(u, lens.mu()) == 0) {
    // f(s) = 2^{2s+1} mu^{-2s} zeta(2s);  f'(0) = 4 log(2/mu) zeta(0) + 4 zeta'(0)
    const double z0 = riemann_zeta(0.0).value.real();
    const double dz0 = riemann_zeta_ds(0.0).value.real();
    return -static_cast<double>(n + 1) * (4.0 * log_scale * z0 + 4.0 * dz0);
  }

  // g(s) = -2^{2s} mu^{-2s} S(2s);  g'(0) = -(2 log(2/mu) S(0) + 2 S'(0))
  double s0 = 0.0;
  double ds0 = 0.0;
  for (const HurwitzPair& h : hurwitz_parameters(lens, u)) {
    s0 += hurwitz_zeta(0.0, h.plus).value.real() + hurwitz_zeta(0.0, h.minus).value.real();
    ds0 += hurwitz_zeta_ds(0.0, h.plus).value.real() + hurwitz_zeta_ds(0.0, h.minus).value.real();
  }
  return -(2.0 * log_scale * s0 + 2.0 * ds0);
}

double contact_torsion_closed(const LensSpace& lens, std::int64_t u) {
  const std::int64_t mu = lens.mu();
  if (reduce_mod(u, mu) == 0) {
    return std::pow(4.0 * kPi / static_cast<double>(mu), lens.n() + 1);
  }
  double product = 1.0;
  for (std::int64_t tau : lens.tau()) product *= chord(u * tau, mu);
  return product;
}

double contact_torsion(const LensSpace& lens, const FlatBundle& bundle) {
  if (bundle.mu() != lens.mu()) throw DomainError("bundle and lens space disagree on mu");
  double closed = 1.0;
  double log_derivative = 0.0;
  for (std::int64_t u : bundle.characters()) {
    closed *= contact_torsion_closed(lens, u);
    log_derivative += kappa_prime0(lens, u);
  }
  const double via_kappa = std::exp(log_derivative / 2.0);
  if (std::abs(via_kappa - closed) > 1e-9 * std::abs(closed)) {
    throw ConsistencyError("contact torsion: closed form " + std::to_string(closed) +
                           " disagrees with exp(kappa'(0)/2) = " + std::to_string(via_kappa));
  }
  return closed;
}

double ray_singer_torsion(const LensSpace& lens, const FlatBundle& bundle) {
  if (bundle.mu() != lens.mu()) throw DomainError("bundle and lens space disagree on mu");
  const int n = lens.n();
  const std::int64_t mu = lens.mu();
  const double trivial_factor = std::pow(4.0 * kPi, n + 1) /
                                (static_cast<double>(factorial(n)) *
                                 std::pow(static_cast<double>(mu), n + 1));
  double product = 1.0;
  for (std::int64_t u : bundle.characters()) {
    if (u == 0) {
      product *= trivial_factor;
    } else {
      for (std::int64_t tau : lens.tau()) product *= chord(u * tau, mu);
    }
  }
  return product;
}

double weng_you_sphere(int n) {
  if (n < 1) throw DomainError("weng_you_sphere: n must be >= 1");
  return 2.0 * std::pow(kPi, n + 1) / static_cast<double>(factorial(n));
}

RaySingerEndpoints ray_singer_endpoints(const LensSpace& lens) {
  const int n = lens.n();
  RaySingerEndpoints out;
  out.twisted_average_prime0 = twisted_average_prime0(n, lens.mu());
  // On the sphere the two pieces add up to 2 log T_dR(S^{2n+1}, g_std).
  out.untwisted_prime0 = 2.0 * std::log(weng_you_sphere(n)) - twisted_average_prime0(n, 1);
  return out;
}

int dim_h0(const FlatBundle& bundle) {
  int count = 0;
  for (std::int64_t u : bundle.characters()) count += (u == 0) ? 1 : 0;
  return count;
}

TorsionReport torsion_report(const LensSpace& lens, const FlatBundle& bundle) {
  if (bundle.mu() != lens.mu()) throw DomainError("bundle and lens space disagree on mu");
  TorsionReport r;
  for (std::int64_t u : bundle.characters()) {
    r.kappa0 += kappa_closed(lens, u, 0.0).value.real();
    r.kappa_prime0 += kappa_prime0(lens, u);
  }
  r.contact = std::exp(r.kappa_prime0 / 2.0);
  const double closed = contact_torsion(lens, bundle);
  if (std::abs(r.contact - closed) > 1e-9 * closed) {
    throw ConsistencyError("torsion report: exp(kappa'(0)/2) disagrees with the closed form");
  }
  r.ray_singer = ray_singer_torsion(lens, bundle);
  r.dim_h0 = dim_h0(bundle);
  r.ratio_check =
      r.contact / (std::pow(static_cast<double>(factorial(lens.n())), r.dim_h0) * r.ray_singer);
  return r;
}

}  // namespace lenstorsion
