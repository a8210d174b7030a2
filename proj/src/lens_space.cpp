#include "lenstorsion/lens_space.hpp"

#include <string>
#include <utility>

#include "lenstorsion/errors.hpp"

namespace lenstorsion {

std::int64_t reduce_mod(std::int64_t w, std::int64_t mu) {
  if (mu < 1) throw DomainError("modulus must be >= 1");
  const std::int64_t r = w % mu;
  return r < 0 ? r + mu : r;
}

std::int64_t positive_residue(std::int64_t w, std::int64_t mu) {
  const std::int64_t r = reduce_mod(w, mu);
  return r == 0 ? mu : r;
}

std::int64_t mod_inverse(std::int64_t nu, std::int64_t mu) {
  if (mu < 1) throw DomainError("mod_inverse: modulus must be >= 1");
  // Extended Euclid on (nu mod mu, mu).
  std::int64_t old_r = reduce_mod(nu, mu);
  std::int64_t r = mu;
  std::int64_t old_x = 1;
  std::int64_t x = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_x = std::exchange(x, old_x - q * x);
  }
  if (old_r != 1 && mu != 1) {
    throw NotCoprimeError("mod_inverse: " + std::to_string(nu) + " is not invertible modulo " +
                          std::to_string(mu));
  }
  return positive_residue(old_x, mu);
}

LensSpace::LensSpace(int n, std::int64_t mu, std::vector<std::int64_t> nu)
    : n_(n), mu_(mu), nu_(std::move(nu)) {
  if (n_ < 1) throw DomainError("lens space: n must be >= 1");
  if (mu_ < 1) throw DomainError("lens space: mu must be >= 1");
  if (nu_.size() != static_cast<std::size_t>(n_) + 1) {
    throw DomainError("lens space: expected " + std::to_string(n_ + 1) + " weights nu, got " +
                      std::to_string(nu_.size()));
  }
  tau_.reserve(nu_.size());
  for (std::int64_t v : nu_) tau_.push_back(mod_inverse(v, mu_));
}

LensSpace LensSpace::sphere(int n) {
  return LensSpace(n, 1, std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 1));
}

FlatBundle::FlatBundle(std::vector<std::int64_t> characters, std::int64_t mu)
    : us_(std::move(characters)), mu_(mu) {
  if (us_.empty()) throw DomainError("flat bundle: rank must be >= 1");
  for (auto& u : us_) u = reduce_mod(u, mu_);
}

}  // namespace lenstorsion
