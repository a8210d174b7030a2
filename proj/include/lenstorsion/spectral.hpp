#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include <boost/rational.hpp>

#include "lenstorsion/lens_space.hpp"
#include "lenstorsion/rep_theory.hpp"

namespace lenstorsion {

using Rational = boost::rational<std::int64_t>;

/// The seven families of U(n+1)-types in the primitive (s, t)-forms with s + t <= n.
enum class BlockCase : int { I = 0, II, III, IV, V, VI, VII };

inline constexpr std::array<BlockCase, 7> kAllCases = {BlockCase::I,  BlockCase::II, BlockCase::III,
                                                       BlockCase::IV, BlockCase::V,  BlockCase::VI,
                                                       BlockCase::VII};

const char* to_string(BlockCase c);

/// Set of cases to include in a partial spectral sum.
class CaseMask {
 public:
  constexpr CaseMask() = default;
  constexpr CaseMask(std::initializer_list<BlockCase> cases) {
    for (BlockCase c : cases) bits_ |= bit(c);
  }
  static constexpr CaseMask all() { return CaseMask(0x7f); }
  constexpr bool contains(BlockCase c) const { return (bits_ & bit(c)) != 0; }

 private:
  constexpr explicit CaseMask(unsigned bits) : bits_(bits) {}
  static constexpr unsigned bit(BlockCase c) { return 1u << static_cast<int>(c); }
  unsigned bits_ = 0;
};

struct Bidegree {
  int s;
  int t;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// One irreducible U(n+1)-type V(q, 1_j, 0_{n-1-i-j}, -1_i, -p) together with the bidegrees
/// (s, t), s + t <= n, in which it occurs and its Rumin Laplacian eigenvalue.
struct SpectralBlock {
  BlockCase kind;
  int q;
  int j;
  int i;
  int p;
  HighestWeight weight;
  std::vector<Bidegree> bidegrees;
  Rational eigenvalue;

  /// Number of listed bidegrees with s + t == k.
  int count_in_degree(int k) const;
};

/// ((p + i)(q + n - i) + (q + j)(p + n - j))^2 / (4 (n - i - j)^2).
/// Throws DomainError when i + j == n.
Rational eigenvalue(int n, int q, int j, int i, int p);

/// Builds a block after checking that (q, j, i, p) lies in the parameter range of `kind`.
SpectralBlock make_block(int n, BlockCase kind, int q, int j, int i, int p);

/// Calls `visit` for every block with 1 <= p <= pmax and/or 1 <= q <= qmax, in the
/// deterministic order (case, i, j, p, q).
void for_each_block(int n, int pmax, int qmax, const std::function<void(const SpectralBlock&)>& visit);

std::vector<SpectralBlock> enumerate_blocks(const LensSpace& lens, int pmax, int qmax);

/// dim V(weight)^{alpha_u} times the number of bidegrees of the block in degree k.
std::int64_t block_multiplicity(const SpectralBlock& block, const LensSpace& lens, std::int64_t u,
                                int k);

struct KappaDirect {
  double value = 0.0;
  /// Sum of |contributions| from the outer half shell max(p / pmax, q / qmax) > 1/2. For terms
  /// decaying at least like r^{-2} per shell this dominates the discarded remainder.
  double tail = 0.0;
  /// False when tail > 1e-4 |value|.
  bool converged = true;
  /// Largest pre-rounding distance from an integer among all fixed-subspace dimensions used.
  double max_integrality_defect = 0.0;
  /// Number of weights checked for sum_u dim V^{alpha_u} == dim V.
  std::int64_t weights_checked = 0;
};

struct KappaDirectOptions {
  CaseMask cases = CaseMask::all();
  /// 0 means: TORSION_THREADS if set, otherwise hardware concurrency.
  unsigned threads = 0;
};

/// kappa(s) = sum_k (-1)^{k+1} (n+1-k) zeta(Delta^k)(s) by truncated summation over blocks,
/// with the harmonic constant -(n+1) dim V^{alpha_u}(0) included when Case I is selected.
/// Requires real s >= n + 2 and pmax, qmax >= 16.
KappaDirect kappa_direct(const LensSpace& lens, std::int64_t u, double s, int pmax, int qmax,
                         const KappaDirectOptions& options = {});

/// Same sum for every u in {0, ..., mu - 1}; each character is evaluated once.
/// The reduction order is fixed, so results do not depend on the thread count.
std::vector<KappaDirect> kappa_direct_all(const LensSpace& lens, double s, int pmax, int qmax,
                                          const KappaDirectOptions& options = {});

/// Checks that the alternating degree weights of Case II and Case V blocks sum to zero.
bool check_cancellation(int n);

/// Worker count from TORSION_THREADS (if set and positive) capped by hardware concurrency.
unsigned default_thread_count();

}  // namespace lenstorsion
