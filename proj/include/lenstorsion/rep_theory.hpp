#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "lenstorsion/lens_space.hpp"

namespace lenstorsion {

/// Highest weight lambda_1 >= ... >= lambda_m of an irreducible U(m) representation.
class HighestWeight {
 public:
  /// One run of the underline notation: `count` consecutive entries equal to `value`.
  struct Run {
    int value;
    int count;
  };

  explicit HighestWeight(std::vector<int> entries);

  /// (a_1 repeated k_1 times, a_2 repeated k_2 times, ...). Runs of length zero are dropped.
  static HighestWeight from_runs(std::initializer_list<Run> runs);

  /// (q, 1_j, 0_{n-1-i-j}, -1_i, -p), a weight of U(n+1).
  static HighestWeight family(int n, int q, int j, int i, int p);

  std::span<const int> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;

 private:
  std::vector<int> entries_;
};

/// The torus element (exp(2 pi i e_1 / mu), ..., exp(2 pi i e_m / mu)) of U(m).
/// Exponents are stored reduced to {0, ..., mu - 1}.
class TorusElement {
 public:
  TorusElement(std::int64_t mu, std::vector<std::int64_t> exps);

  static TorusElement identity(std::int64_t mu, std::size_t size);
  /// gamma^ell for the generator gamma of the lens space group.
  static TorusElement generator_power(const LensSpace& lens, std::int64_t ell);

  std::int64_t mu() const { return mu_; }
  std::span<const std::int64_t> exps() const { return exps_; }
  std::size_t size() const { return exps_.size(); }

  /// Coordinates as complex numbers.
  std::vector<std::complex<double>> coordinates() const;
  TorusElement conjugate() const;

 private:
  std::int64_t mu_;
  std::vector<std::int64_t> exps_;
};

/// Class function values at a fixed torus element t whose coordinates are mu-th roots of
/// unity. Characters are computed exactly in Z[x]/(x^mu - 1), substituting
/// t_k = x^{e_k}; the integer "charge" vector c satisfies
///   chi(t) = sum_r c[r] exp(2 pi i r / mu).
/// Complete homogeneous polynomials are tabulated once up to `max_degree`; after
/// construction the object is immutable and safe to share between threads.
class CharacterEvaluator {
 public:
  CharacterEvaluator(TorusElement t, int max_degree);

  const TorusElement& point() const { return t_; }
  int max_degree() const { return max_degree_; }

  /// Largest complete-homogeneous degree needed for `character_charges(lambda)`.
  static int required_degree(const HighestWeight& lambda);

  std::vector<std::int64_t> elementary_charges(int j) const;
  std::vector<std::int64_t> complete_charges(int q) const;
  /// Schur polynomial by the Jacobi-Trudi determinant det(h_{lambda_a - a + b}), after
  /// shifting lambda by a power of the determinant so that all entries are >= 0.
  std::vector<std::int64_t> character_charges(const HighestWeight& lambda) const;

  std::complex<double> character(const HighestWeight& lambda) const;

 private:
  std::span<const std::int64_t> h(int k) const;

  TorusElement t_;
  int max_degree_;
  std::vector<std::int64_t> h_;  // (max_degree + 1) x mu, row k holds h_k
};

/// sum_r charges[r] * exp(2 pi i r / mu).
std::complex<double> evaluate_charges(std::span<const std::int64_t> charges);

/// e_j(t), 0 <= j <= t.size(). Throws DomainError otherwise.
std::complex<double> elementary_symmetric(const TorusElement& t, int j);

/// h_q(t), q >= 0.
std::complex<double> complete_homogeneous(const TorusElement& t, int q);

/// chi_{V(lambda)}(t). lambda.size() must equal t.size().
std::complex<double> character(const HighestWeight& lambda, const TorusElement& t);

/// Dimensions of V(lambda)^{alpha_u} for every u in {0, ..., mu - 1}, obtained by averaging
/// chi(gamma^ell) exp(2 pi i u ell / mu) over the group.
struct FixedDimensions {
  std::int64_t dimension = 0;
  std::vector<std::int64_t> by_character;
  /// Largest distance from an integer (real part or |imag part|) seen before rounding.
  double max_defect = 0.0;
};

/// Integrality tolerance on group averages before rounding.
inline constexpr double kIntegralityTolerance = 1e-8;

/// `at_generator` must be evaluated at gamma (ell = 1). Throws IntegralityError when an
/// average is not within kIntegralityTolerance of a nonnegative integer.
FixedDimensions fixed_dimensions(const CharacterEvaluator& at_generator,
                                 const HighestWeight& lambda);

/// dim V(lambda)^{alpha_u} on the given lens space.
std::int64_t fixed_dim(const HighestWeight& lambda, const LensSpace& lens, std::int64_t u);

/// |e_j h_q - chi(q, 1_j, 0) - chi(q + 1, 1_{j-1}, 0)| at t, for q >= 1 and 1 <= j <= n.
double check_richardson_littlewood(const TorusElement& t, int q, int j);

struct GeneratingIdentityCheck {
  double residual = 0.0;
  /// Bound on the discarded part of the truncated q-series.
  double tail_bound = 0.0;
  int terms = 0;
};

/// Compares
///   (sum_{j=0}^{n} c_j e_j X^j)(sum_{q=1}^{Q} h_q X^q) + sum_{j=1}^{n} c_j e_j X^j,
///   c_j = (-1)^{j+1} (n + 1 - j),
/// with -sum_k t_k X / (1 - t_k X), where Q is the least integer with
/// X^Q (n + Q)^n <= 1e-10. Requires 0 < X < 1.
GeneratingIdentityCheck check_generating_identity(const TorusElement& t, double x);

/// |sum_j (-1)^j e_j(t) X^j - prod_k (1 - t_k X)|.
double check_f1_factorization(const TorusElement& t, double x);

}  // namespace lenstorsion
