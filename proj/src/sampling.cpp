#include "lenstorsion/sampling.hpp"

#include <numeric>

#include "lenstorsion/errors.hpp"

namespace lenstorsion {

std::int64_t SplitMix64::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>((*this)());
  const std::uint64_t limit = max() - max() % span;
  std::uint64_t x = (*this)();
  while (x >= limit) x = (*this)();
  return lo + static_cast<std::int64_t>(x % span);
}

std::vector<std::int64_t> sample_coprime_weights(SplitMix64& rng, int n, std::int64_t mu) {
  if (n < 1 || mu < 1) throw DomainError("sample_coprime_weights: need n >= 1 and mu >= 1");
  std::vector<std::int64_t> nu;
  nu.reserve(static_cast<std::size_t>(n) + 1);
  while (nu.size() < static_cast<std::size_t>(n) + 1) {
    const std::int64_t v = rng.uniform_int(1, mu);
    if (std::gcd(v, mu) == 1) nu.push_back(v);
  }
  return nu;
}

TorusElement sample_torus_element(SplitMix64& rng, std::int64_t mu, std::size_t size) {
  std::vector<std::int64_t> exps(size);
  for (auto& e : exps) e = rng.uniform_int(0, mu - 1);
  return TorusElement(mu, std::move(exps));
}

}  // namespace lenstorsion
