#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lenstorsion {

/// The unique tau in {1, ..., mu} with tau * nu == 1 (mod mu).
/// Throws NotCoprimeError when gcd(nu, mu) != 1 and DomainError when mu < 1.
std::int64_t mod_inverse(std::int64_t nu, std::int64_t mu);

/// The representative of w modulo mu lying in {1, ..., mu} (so mu maps to mu, not 0).
std::int64_t positive_residue(std::int64_t w, std::int64_t mu);

/// Representative of w modulo mu lying in {0, ..., mu - 1}.
std::int64_t reduce_mod(std::int64_t w, std::int64_t mu);

/// The lens space S^{2n+1} / Gamma, where Gamma is cyclic of order mu generated by
/// (exp(2 pi i nu_1 / mu), ..., exp(2 pi i nu_{n+1} / mu)).
class LensSpace {
 public:
  /// Validates n >= 1, mu >= 1, nu.size() == n + 1 and gcd(nu_j, mu) == 1.
  LensSpace(int n, std::int64_t mu, std::vector<std::int64_t> nu);

  /// The round sphere S^{2n+1} (mu = 1).
  static LensSpace sphere(int n);

  int n() const { return n_; }
  std::int64_t mu() const { return mu_; }
  std::span<const std::int64_t> nu() const { return nu_; }
  /// tau_j in {1, ..., mu} with tau_j nu_j == 1 (mod mu).
  std::span<const std::int64_t> tau() const { return tau_; }

 private:
  int n_;
  std::int64_t mu_;
  std::vector<std::int64_t> nu_;
  std::vector<std::int64_t> tau_;
};

/// Flat bundle E_alpha = E_{u_1} + ... + E_{u_r} given by the characters of a
/// diagonalized holonomy representation. Characters are stored reduced to
/// {0, ..., mu - 1}.
class FlatBundle {
 public:
  FlatBundle(std::vector<std::int64_t> characters, std::int64_t mu);

  static FlatBundle trivial(std::int64_t mu) { return FlatBundle({0}, mu); }

  std::span<const std::int64_t> characters() const { return us_; }
  std::size_t rank() const { return us_.size(); }
  std::int64_t mu() const { return mu_; }

 private:
  std::vector<std::int64_t> us_;
  std::int64_t mu_;
};

}  // namespace lenstorsion
