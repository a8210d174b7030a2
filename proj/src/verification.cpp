#include "lenstorsion/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lenstorsion/rep_theory.hpp"
#include "lenstorsion/sampling.hpp"
#include "lenstorsion/spectral.hpp"
#include "lenstorsion/special_functions.hpp"
#include "lenstorsion/torsion.hpp"

namespace lenstorsion {

namespace {

class Tracker {
 public:
  Tracker(std::string name, double tolerance) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
  }
  void record(double residual) {
    ++result_.cases;
    if (!(residual <= result_.tolerance)) result_.passed = false;
    if (std::isnan(residual)) {
      result_.max_residual = residual;
    } else if (!std::isnan(result_.max_residual)) {
      result_.max_residual = std::max(result_.max_residual, residual);
    }
  }
  void fail() { result_.passed = false; }
  CheckResult done() const { return result_; }

 private:
  CheckResult result_;
};

std::vector<LensSpace> lens_grid(const LedgerConfig& config, SplitMix64& rng, int max_n) {
  std::vector<LensSpace> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int mu = 1; mu <= config.max_mu; ++mu) {
      out.emplace_back(n, mu, sample_coprime_weights(rng, n, mu));
    }
  }
  return out;
}

}  // namespace

std::vector<CheckResult> run_identity_ledger(const LedgerConfig& config) {
  SplitMix64 rng(config.seed);
  std::vector<CheckResult> results;

  {
    Tracker rl("richardson_littlewood", 1e-10);
    for (int k = 0; k < config.samples; ++k) {
      const int n = static_cast<int>(rng.uniform_int(1, 4));
      const auto t = sample_torus_element(rng, rng.uniform_int(1, 64), static_cast<std::size_t>(n) + 1);
      const int q = static_cast<int>(rng.uniform_int(1, 8));
      const int j = static_cast<int>(rng.uniform_int(1, n));
      rl.record(check_richardson_littlewood(t, q, j));
    }
    results.push_back(rl.done());
  }

  {
    // Residual is reported net of its allowance: residual - tail.
    Tracker gen("generating_function", 1e-8);
    Tracker f1("f1_factorization", 1e-12);
    for (int k = 0; k < config.samples; ++k) {
      const int n = static_cast<int>(rng.uniform_int(1, 4));
      const auto t = sample_torus_element(rng, rng.uniform_int(1, 64), static_cast<std::size_t>(n) + 1);
      const double x = std::max(0.9 * rng.uniform_unit(), 1e-3);
      const auto check = check_generating_identity(t, x);
      gen.record(check.residual - check.tail_bound);
      f1.record(check_f1_factorization(t, x));
    }
    results.push_back(gen.done());
    results.push_back(f1.done());
  }

  {
    Tracker conj("character_conjugation", 1e-10);
    for (int k = 0; k < config.samples; ++k) {
      const int n = static_cast<int>(rng.uniform_int(1, 3));
      const auto t = sample_torus_element(rng, rng.uniform_int(1, 16), static_cast<std::size_t>(n) + 1);
      const int q = static_cast<int>(rng.uniform_int(0, 4));
      const int p = static_cast<int>(rng.uniform_int(0, 4));
      const auto lambda = HighestWeight::from_runs({{q, 1}, {0, n - 1}, {-p, 1}});
      conj.record(std::abs(character(lambda, t.conjugate()) - std::conj(character(lambda, t))));
    }
    results.push_back(conj.done());
  }

  {
    Tracker value("hurwitz_pairing_value", 1e-10);
    Tracker deriv("hurwitz_pairing_derivative", 1e-9);
    Tracker lerch("lerch_log_gamma", 1e-10);
    const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
    for (int k = 1; k <= 63; ++k) {
      const double a = k / 64.0;
      const double b = 1.0 - a;
      value.record(std::abs(hurwitz_zeta(0.0, a).value + hurwitz_zeta(0.0, b).value));
      const double chord = std::abs(std::polar(1.0, 2.0 * std::numbers::pi * a) - 1.0);
      deriv.record(std::abs(hurwitz_zeta_ds(0.0, a).value.real() +
                            hurwitz_zeta_ds(0.0, b).value.real() + std::log(chord)));
      lerch.record(std::abs(hurwitz_zeta_ds(0.0, a).value.real() - (log_gamma(a) - half_log_2pi)));
    }
    results.push_back(value.done());
    results.push_back(deriv.done());
    results.push_back(lerch.done());
  }

  {
    Tracker cancel("case_II_V_cancellation", 0.0);
    for (int n = 1; n <= 16; ++n) cancel.record(check_cancellation(n) ? 0.0 : 1.0);
    results.push_back(cancel.done());
  }

  const auto grid = lens_grid(config, rng, config.max_n);
  {
    Tracker vanish("kappa_vanishes_at_zero", 1e-10);
    Tracker closed("torsion_closed_forms", 1e-9);
    Tracker ratio("contact_vs_ray_singer", 1e-9);
    Tracker endpoints("ray_singer_endpoints", 1e-12);
    for (const LensSpace& lens : grid) {
      const int n = lens.n();
      const std::int64_t mu = lens.mu();
      for (std::int64_t u = 0; u < mu; ++u) {
        vanish.record(std::abs(kappa_closed(lens, u, 0.0).value));
        const double closed_form = contact_torsion_closed(lens, u);
        closed.record(std::abs(std::exp(kappa_prime0(lens, u) / 2.0) - closed_form) / closed_form);
        const auto report = torsion_report(lens, FlatBundle({u}, mu));
        ratio.record(std::abs(report.ratio_check - 1.0));
      }
      // A rank-3 bundle with a random mix of characters.
      std::vector<std::int64_t> us(3);
      for (auto& u : us) u = rng.uniform_int(0, mu - 1);
      ratio.record(std::abs(torsion_report(lens, FlatBundle(us, mu)).ratio_check - 1.0));

      const double expected = 2.0 * std::log(2.0 * std::pow(std::numbers::pi, n + 1) /
                                             (static_cast<double>(factorial(n)) *
                                              std::pow(static_cast<double>(mu), n + 1)));
      endpoints.record(std::abs(ray_singer_endpoints(lens).sum() - expected));
    }
    results.push_back(vanish.done());
    results.push_back(closed.done());
    results.push_back(ratio.done());
    results.push_back(endpoints.done());
  }

  {
    // Residual reported net of the truncation allowance.
    Tracker oracle("spectral_sum_vs_closed_form", 1e-8);
    for (const LensSpace& lens : grid) {
      if (lens.n() > 3) continue;
      const double s = lens.n() + 3;
      const auto direct = kappa_direct_all(lens, s, config.truncation, config.truncation);
      for (std::int64_t u = 0; u < lens.mu(); ++u) {
        const auto& d = direct[static_cast<std::size_t>(u)];
        const double closed = kappa_closed(lens, u, s).value.real();
        oracle.record(std::abs(d.value - closed) - d.tail);
      }
    }
    results.push_back(oracle.done());
  }

  return results;
}

}  // namespace lenstorsion
