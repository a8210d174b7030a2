#include "lenstorsion/rep_theory.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "lenstorsion/errors.hpp"

namespace lenstorsion {

namespace {

using i128 = __int128;

// Number of monomials of degree k in m variables, as a float for overflow estimates.
long double monomial_count(int k, std::size_t m) {
  if (k < 0) return 0.0L;
  long double c = 1.0L;
  for (std::size_t r = 1; r < m; ++r) {
    c = c * static_cast<long double>(k + static_cast<long double>(r)) / static_cast<long double>(r);
  }
  return c;
}

// out += sign * x^{shift} * a, all in Z[x]/(x^mu - 1).
template <class Int, class Src>
void add_rotated(std::span<Int> out, std::span<const Src> a, std::int64_t shift) {
  const auto mu = static_cast<std::int64_t>(out.size());
  for (std::int64_t r = 0; r < mu; ++r) {
    if (a[r] == 0) continue;
    std::int64_t target = r + shift;
    if (target >= mu) target -= mu;
    out[target] += static_cast<Int>(a[r]);
  }
}

// out += sign * a * b in Z[x]/(x^mu - 1).
template <class Int>
void multiply_accumulate(std::span<Int> out, std::span<const Int> a,
                         std::span<const std::int64_t> b, int sign) {
  const auto mu = static_cast<std::int64_t>(out.size());
  for (std::int64_t r = 0; r < mu; ++r) {
    const Int ar = sign > 0 ? a[r] : -a[r];
    if (ar == 0) continue;
    for (std::int64_t c = 0; c < mu; ++c) {
      if (b[c] == 0) continue;
      std::int64_t target = r + c;
      if (target >= mu) target -= mu;
      out[target] += ar * static_cast<Int>(b[c]);
    }
  }
}

// Jacobi-Trudi determinant of the ell x ell matrix h_{parts[a] - a + b} by expansion over
// column subsets. Division free, so it is exact over the group ring.
template <class Int, class HLookup>
std::vector<Int> jacobi_trudi(std::span<const int> parts, std::int64_t mu, HLookup&& h) {
  const int ell = static_cast<int>(parts.size());
  const std::size_t states = std::size_t{1} << ell;
  const auto width = static_cast<std::size_t>(mu);
  std::vector<Int> minors(states * width, Int{0});
  std::vector<bool> nonzero(states, false);
  minors[0] = Int{1};
  nonzero[0] = true;

  for (std::size_t subset = 0; subset + 1 < states; ++subset) {
    if (!nonzero[subset]) continue;
    const int row = std::popcount(subset);
    std::span<const Int> minor(minors.data() + subset * width, width);
    for (int col = 0; col < ell; ++col) {
      const std::size_t bit = std::size_t{1} << col;
      if (subset & bit) continue;
      const int k = parts[row] - row + col;
      if (k < 0) continue;
      const int larger = std::popcount(subset >> (col + 1));
      const std::size_t next = subset | bit;
      multiply_accumulate<Int>(std::span<Int>(minors.data() + next * width, width), minor, h(k),
                               (larger % 2 == 0) ? 1 : -1);
      nonzero[next] = true;
    }
  }
  return {minors.end() - static_cast<std::ptrdiff_t>(width), minors.end()};
}

std::complex<long double> root_of_unity(std::int64_t r, std::int64_t mu) {
  const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(r) /
                            static_cast<long double>(mu);
  return {std::cos(angle), std::sin(angle)};
}

std::complex<long double> evaluate_long(std::span<const std::int64_t> charges, std::int64_t power) {
  const auto mu = static_cast<std::int64_t>(charges.size());
  std::complex<long double> acc{0.0L, 0.0L};
  for (std::int64_t r = 0; r < mu; ++r) {
    if (charges[r] == 0) continue;
    acc += static_cast<long double>(charges[r]) * root_of_unity((r * power) % mu, mu);
  }
  return acc;
}

void require_same_rank(const HighestWeight& lambda, const TorusElement& t) {
  if (lambda.size() != t.size()) {
    throw DomainError("weight has " + std::to_string(lambda.size()) +
                      " entries but torus element has " + std::to_string(t.size()));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// HighestWeight

HighestWeight::HighestWeight(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("highest weight must have at least one entry");
  for (std::size_t k = 0; k + 1 < entries_.size(); ++k) {
    if (entries_[k] < entries_[k + 1]) {
      throw DomainError("highest weight entries must be weakly decreasing");
    }
  }
}

HighestWeight HighestWeight::from_runs(std::initializer_list<Run> runs) {
  std::vector<int> entries;
  for (const Run& run : runs) {
    if (run.count < 0) throw DomainError("negative run length in highest weight");
    entries.insert(entries.end(), static_cast<std::size_t>(run.count), run.value);
  }
  return HighestWeight(std::move(entries));
}

HighestWeight HighestWeight::family(int n, int q, int j, int i, int p) {
  const int zeros = n - 1 - i - j;
  if (n < 1 || i < 0 || j < 0 || zeros < 0) {
    throw DomainError("family weight (q, 1_j, 0_{n-1-i-j}, -1_i, -p) needs i, j >= 0 and i + j <= n - 1");
  }
  return from_runs({{q, 1}, {1, j}, {0, zeros}, {-1, i}, {-p, 1}});
}

// ---------------------------------------------------------------------------
// TorusElement

TorusElement::TorusElement(std::int64_t mu, std::vector<std::int64_t> exps)
    : mu_(mu), exps_(std::move(exps)) {
  if (mu_ < 1) throw DomainError("torus element: mu must be >= 1");
  if (exps_.empty()) throw DomainError("torus element: need at least one coordinate");
  for (auto& e : exps_) e = reduce_mod(e, mu_);
}

TorusElement TorusElement::identity(std::int64_t mu, std::size_t size) {
  return TorusElement(mu, std::vector<std::int64_t>(size, 0));
}

TorusElement TorusElement::generator_power(const LensSpace& lens, std::int64_t ell) {
  std::vector<std::int64_t> exps;
  exps.reserve(lens.nu().size());
  for (std::int64_t v : lens.nu()) {
    exps.push_back(reduce_mod(reduce_mod(v, lens.mu()) * reduce_mod(ell, lens.mu()), lens.mu()));
  }
  return TorusElement(lens.mu(), std::move(exps));
}

std::vector<std::complex<double>> TorusElement::coordinates() const {
  std::vector<std::complex<double>> out;
  out.reserve(exps_.size());
  for (std::int64_t e : exps_) {
    const auto z = root_of_unity(e, mu_);
    out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  return out;
}

TorusElement TorusElement::conjugate() const {
  std::vector<std::int64_t> exps;
  exps.reserve(exps_.size());
  for (std::int64_t e : exps_) exps.push_back(-e);
  return TorusElement(mu_, std::move(exps));
}

// ---------------------------------------------------------------------------
// CharacterEvaluator

CharacterEvaluator::CharacterEvaluator(TorusElement t, int max_degree)
    : t_(std::move(t)), max_degree_(max_degree) {
  if (max_degree_ < 0) throw DomainError("character evaluator: negative degree");
  if (monomial_count(max_degree_, t_.size()) > 0x1p62L) {
    throw std::overflow_error("character evaluator: degree too large for 64-bit tables");
  }
  const auto mu = static_cast<std::size_t>(t_.mu());
  h_.assign(static_cast<std::size_t>(max_degree_ + 1) * mu, 0);
  h_[0] = 1;
  // Generating function prod_k 1/(1 - t_k X), one variable at a time:
  // h_q <- h_q + t_k h_{q-1}.
  for (std::int64_t e : t_.exps()) {
    for (int k = 1; k <= max_degree_; ++k) {
      std::span<std::int64_t> row(h_.data() + static_cast<std::size_t>(k) * mu, mu);
      std::span<const std::int64_t> prev(h_.data() + static_cast<std::size_t>(k - 1) * mu, mu);
      add_rotated<std::int64_t, std::int64_t>(row, prev, e);
    }
  }
}

std::span<const std::int64_t> CharacterEvaluator::h(int k) const {
  const auto mu = static_cast<std::size_t>(t_.mu());
  return {h_.data() + static_cast<std::size_t>(k) * mu, mu};
}

int CharacterEvaluator::required_degree(const HighestWeight& lambda) {
  const auto e = lambda.entries();
  const int top = e.front() - e.back();
  int length = 0;
  for (int v : e) length += (v > e.back()) ? 1 : 0;
  return std::max(0, top + length - 1);
}

std::vector<std::int64_t> CharacterEvaluator::elementary_charges(int j) const {
  const auto m = static_cast<int>(t_.size());
  if (j < 0 || j > m) {
    throw DomainError("elementary_symmetric: index " + std::to_string(j) + " out of range [0, " +
                      std::to_string(m) + "]");
  }
  const auto mu = static_cast<std::size_t>(t_.mu());
  // rows[r] = e_r of the variables processed so far
  std::vector<std::int64_t> rows(static_cast<std::size_t>(j + 1) * mu, 0);
  rows[0] = 1;
  for (std::int64_t e : t_.exps()) {
    for (int r = j; r >= 1; --r) {
      add_rotated<std::int64_t, std::int64_t>(
          std::span<std::int64_t>(rows.data() + static_cast<std::size_t>(r) * mu, mu),
          std::span<const std::int64_t>(rows.data() + static_cast<std::size_t>(r - 1) * mu, mu),
          e);
    }
  }
  return {rows.end() - static_cast<std::ptrdiff_t>(mu), rows.end()};
}

std::vector<std::int64_t> CharacterEvaluator::complete_charges(int q) const {
  if (q < 0) throw DomainError("complete_homogeneous: degree must be >= 0");
  if (q > max_degree_) throw DomainError("complete_homogeneous: degree exceeds tabulated range");
  const auto row = h(q);
  return {row.begin(), row.end()};
}

std::vector<std::int64_t> CharacterEvaluator::character_charges(const HighestWeight& lambda) const {
  require_same_rank(lambda, t_);
  const auto entries = lambda.entries();
  const int floor = entries.back();
  std::vector<int> parts;
  for (int v : entries) {
    if (v - floor > 0) parts.push_back(v - floor);
  }
  const int needed = required_degree(lambda);
  if (needed > max_degree_) {
    throw DomainError("character: weight needs h up to degree " + std::to_string(needed) +
                      ", evaluator holds " + std::to_string(max_degree_));
  }

  const std::int64_t mu = t_.mu();
  // chi_lambda = det^{floor} * s_{parts}; det(t) = x^{sum e_k}.
  std::int64_t exp_sum = 0;
  for (std::int64_t e : t_.exps()) exp_sum = reduce_mod(exp_sum + e, mu);
  const std::int64_t shift = reduce_mod(reduce_mod(floor, mu) * exp_sum, mu);

  const auto lookup = [this](int k) { return h(k); };
  const auto ell = static_cast<int>(parts.size());
  long double factorial = 1.0L;
  for (int r = 2; r <= ell; ++r) factorial *= r;
  const long double bound =
      factorial * std::pow(monomial_count(parts.empty() ? 0 : parts.front() + ell - 1, t_.size()),
                           static_cast<long double>(ell));

  std::vector<std::int64_t> out(static_cast<std::size_t>(mu), 0);
  const auto place = [&](const auto& det) {
    for (std::int64_t r = 0; r < mu; ++r) {
      const auto v = det[static_cast<std::size_t>(r)];
      if (v > static_cast<decltype(v)>(std::numeric_limits<std::int64_t>::max()) ||
          v < static_cast<decltype(v)>(std::numeric_limits<std::int64_t>::min())) {
        throw std::overflow_error("character: weight multiplicity exceeds 64 bits");
      }
      out[static_cast<std::size_t>(reduce_mod(r + shift, mu))] = static_cast<std::int64_t>(v);
    }
  };
  if (bound < 0x1p62L) {
    place(jacobi_trudi<std::int64_t>(parts, mu, lookup));
  } else if (bound < 0x1p125L) {
    place(jacobi_trudi<i128>(parts, mu, lookup));
  } else {
    throw std::overflow_error("character: Jacobi-Trudi expansion exceeds 128-bit range");
  }
  return out;
}

std::complex<double> CharacterEvaluator::character(const HighestWeight& lambda) const {
  return evaluate_charges(character_charges(lambda));
}

std::complex<double> evaluate_charges(std::span<const std::int64_t> charges) {
  const auto z = evaluate_long(charges, 1);
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// ---------------------------------------------------------------------------
// Free functions

std::complex<double> elementary_symmetric(const TorusElement& t, int j) {
  return evaluate_charges(CharacterEvaluator(t, 0).elementary_charges(j));
}

std::complex<double> complete_homogeneous(const TorusElement& t, int q) {
  if (q < 0) throw DomainError("complete_homogeneous: degree must be >= 0");
  return evaluate_charges(CharacterEvaluator(t, q).complete_charges(q));
}

std::complex<double> character(const HighestWeight& lambda, const TorusElement& t) {
  require_same_rank(lambda, t);
  return CharacterEvaluator(t, CharacterEvaluator::required_degree(lambda)).character(lambda);
}

FixedDimensions fixed_dimensions(const CharacterEvaluator& at_generator,
                                 const HighestWeight& lambda) {
  const std::vector<std::int64_t> charges = at_generator.character_charges(lambda);
  const std::int64_t mu = at_generator.point().mu();

  // chi(gamma^ell) for every ell.
  std::vector<std::complex<long double>> values(static_cast<std::size_t>(mu));
  for (std::int64_t ell = 0; ell < mu; ++ell) values[ell] = evaluate_long(charges, ell);

  FixedDimensions out;
  out.by_character.assign(static_cast<std::size_t>(mu), 0);
  for (std::int64_t c : charges) out.dimension += c;

  for (std::int64_t u = 0; u < mu; ++u) {
    std::complex<long double> acc{0.0L, 0.0L};
    for (std::int64_t ell = 0; ell < mu; ++ell) {
      acc += values[ell] * root_of_unity((u * ell) % mu, mu);
    }
    acc /= static_cast<long double>(mu);
    const long double rounded = std::round(acc.real());
    const double defect = static_cast<double>(
        std::max(std::abs(acc.real() - rounded), std::abs(acc.imag())));
    out.max_defect = std::max(out.max_defect, defect);
    // Charges r with r + u == 0 (mod mu) survive the average.
    const std::int64_t exact = charges[static_cast<std::size_t>(reduce_mod(-u, mu))];
    if (defect > kIntegralityTolerance || rounded < 0.0L ||
        static_cast<std::int64_t>(rounded) != exact) {
      throw IntegralityError("fixed_dim: group average " + std::to_string(static_cast<double>(acc.real())) +
                             " + " + std::to_string(static_cast<double>(acc.imag())) +
                             "i is not the expected nonnegative integer " + std::to_string(exact));
    }
    out.by_character[u] = exact;
  }
  return out;
}

std::int64_t fixed_dim(const HighestWeight& lambda, const LensSpace& lens, std::int64_t u) {
  if (lambda.size() != lens.nu().size()) {
    throw DomainError("fixed_dim: weight length must be n + 1");
  }
  const CharacterEvaluator at_generator(TorusElement::generator_power(lens, 1),
                                        CharacterEvaluator::required_degree(lambda));
  return fixed_dimensions(at_generator, lambda).by_character[reduce_mod(u, lens.mu())];
}

double check_richardson_littlewood(const TorusElement& t, int q, int j) {
  const int n = static_cast<int>(t.size()) - 1;
  if (q < 1 || j < 1 || j > n) {
    throw DomainError("Richardson-Littlewood check needs q >= 1 and 1 <= j <= n");
  }
  const auto column = HighestWeight::from_runs({{1, j}, {0, n + 1 - j}});
  const auto row = HighestWeight::from_runs({{q, 1}, {0, n}});
  const auto first = HighestWeight::from_runs({{q, 1}, {1, j}, {0, n - j}});
  const auto second = HighestWeight::from_runs({{q + 1, 1}, {1, j - 1}, {0, n - j + 1}});
  const std::complex<double> lhs = character(column, t) * character(row, t);
  return std::abs(lhs - character(first, t) - character(second, t));
}

GeneratingIdentityCheck check_generating_identity(const TorusElement& t, double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("generating identity: X must lie in (0, 1)");
  const int n = static_cast<int>(t.size()) - 1;

  int terms = 1;
  while (std::pow(x, terms) * std::pow(static_cast<double>(n + terms), n) > 1e-10) ++terms;

  const CharacterEvaluator eval(t, terms);
  std::complex<double> weighted{0.0, 0.0};  // sum_{j=0}^{n} c_j e_j X^j
  double weighted_abs = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double c = ((j % 2 == 0) ? -1.0 : 1.0) * (n + 1 - j);
    const auto term = c * evaluate_charges(eval.elementary_charges(j)) * std::pow(x, j);
    weighted += term;
    weighted_abs += std::abs(term);
  }
  const std::complex<double> constant_free = weighted - static_cast<double>(-(n + 1));

  std::complex<double> series{0.0, 0.0};
  for (int q = 1; q <= terms; ++q) {
    series += evaluate_charges(eval.complete_charges(q)) * std::pow(x, q);
  }

  std::complex<double> closed{0.0, 0.0};
  for (const auto& tk : t.coordinates()) closed -= tk * x / (1.0 - tk * x);

  // |h_q| <= C(q + n, n); the discarded terms decrease geometrically past Q.
  double tail = 0.0;
  for (int q = terms + 1;; ++q) {
    const double term =
        static_cast<double>(monomial_count(q, t.size())) * std::pow(x, q);
    tail += term;
    if (term < 1e-30 * std::max(tail, 1e-300) || q > terms + 100000) break;
  }

  GeneratingIdentityCheck out;
  out.residual = std::abs(weighted * series + constant_free - closed);
  out.tail_bound = weighted_abs * tail;
  out.terms = terms;
  return out;
}

double check_f1_factorization(const TorusElement& t, double x) {
  const int m = static_cast<int>(t.size());
  const CharacterEvaluator eval(t, 0);
  std::complex<double> series{0.0, 0.0};
  for (int j = 0; j <= m; ++j) {
    series += ((j % 2 == 0) ? 1.0 : -1.0) * evaluate_charges(eval.elementary_charges(j)) *
              std::pow(x, j);
  }
  std::complex<double> product{1.0, 0.0};
  for (const auto& tk : t.coordinates()) product *= 1.0 - tk * x;
  return std::abs(series - product);
}

}  // namespace lenstorsion
