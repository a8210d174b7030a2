#include "lenstorsion/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "lenstorsion/errors.hpp"

namespace lenstorsion {

namespace {

struct BlockParams {
  BlockCase kind;
  int q;
  int j;
  int i;
  int p;
};

bool in_range(int n, const BlockParams& b) {
  const auto [kind, q, j, i, p] = b;
  switch (kind) {
    case BlockCase::I:
      return q == 0 && j == 0 && i == 0 && p == 0;
    case BlockCase::II:
      return i >= 0 && j >= 0 && i + j <= n - 2 && p >= 1 && q >= 1;
    case BlockCase::III:
      // i = 0 included: V(0_n, -p) lives in functions and (1,0)-forms.
      return i >= 0 && i <= n - 1 && j == 0 && p >= 1 && q == 0;
    case BlockCase::IV:
      return i == 0 && j >= 0 && j <= n - 1 && p == 0 && q >= 1;
    case BlockCase::V:
      return i >= 0 && j >= 0 && i + j == n - 1 && p >= 1 && q >= 1;
    case BlockCase::VI:
      return i == n - 1 && j == 0 && p >= 1 && q == -1;
    case BlockCase::VII:
      return i == 0 && j == n - 1 && p == -1 && q >= 1;
  }
  return false;
}

std::vector<Bidegree> bidegrees_of(const BlockParams& b, int n) {
  const int i = b.i;
  const int j = b.j;
  switch (b.kind) {
    case BlockCase::I:
      return {{0, 0}};
    case BlockCase::II:
      return {{i, j}, {i + 1, j}, {i, j + 1}, {i + 1, j + 1}};
    case BlockCase::III:
      return {{i, 0}, {i + 1, 0}};
    case BlockCase::IV:
      return {{0, j}, {0, j + 1}};
    case BlockCase::V:
      return {{i, j}, {i + 1, j}, {i, j + 1}};
    case BlockCase::VI:
      return {{n, 0}};
    case BlockCase::VII:
      return {{0, n}};
  }
  return {};
}

// Deterministic order (case, i, j, p, q).
std::vector<BlockParams> enumerate_parameters(int n, int pmax, int qmax) {
  std::vector<BlockParams> out;
  out.push_back({BlockCase::I, 0, 0, 0, 0});
  for (int i = 0; i <= n - 2; ++i)
    for (int j = 0; i + j <= n - 2; ++j)
      for (int p = 1; p <= pmax; ++p)
        for (int q = 1; q <= qmax; ++q) out.push_back({BlockCase::II, q, j, i, p});
  for (int i = 0; i <= n - 1; ++i)
    for (int p = 1; p <= pmax; ++p) out.push_back({BlockCase::III, 0, 0, i, p});
  for (int j = 0; j <= n - 1; ++j)
    for (int q = 1; q <= qmax; ++q) out.push_back({BlockCase::IV, q, j, 0, 0});
  for (int i = 0; i <= n - 1; ++i)
    for (int p = 1; p <= pmax; ++p)
      for (int q = 1; q <= qmax; ++q) out.push_back({BlockCase::V, q, n - 1 - i, i, p});
  for (int p = 1; p <= pmax; ++p) out.push_back({BlockCase::VI, -1, 0, n - 1, p});
  for (int q = 1; q <= qmax; ++q) out.push_back({BlockCase::VII, q, n - 1, 0, -1});
  return out;
}

SpectralBlock build(int n, const BlockParams& b) {
  return SpectralBlock{b.kind,
                       b.q,
                       b.j,
                       b.i,
                       b.p,
                       HighestWeight::family(n, b.q, b.j, b.i, b.p),
                       bidegrees_of(b, n),
                       eigenvalue(n, b.q, b.j, b.i, b.p)};
}

// Signed weight of zeta(Delta^k) in kappa.
int degree_coefficient(int n, int k) { return ((k % 2 == 0) ? -1 : 1) * (n + 1 - k); }

bool in_outer_shell(const BlockParams& b, int pmax, int qmax) {
  switch (b.kind) {
    case BlockCase::I:
      return false;
    case BlockCase::III:
    case BlockCase::VI:
      return 2 * b.p > pmax;
    case BlockCase::IV:
    case BlockCase::VII:
      return 2 * b.q > qmax;
    case BlockCase::II:
    case BlockCase::V:
      return 2 * b.p > pmax || 2 * b.q > qmax;
  }
  return false;
}

struct ChunkSums {
  // zeta[u * (n + 1) + k]
  std::vector<double> zeta;
  std::vector<double> shell;
  std::vector<double> harmonic;
  double max_defect = 0.0;
  std::int64_t weights = 0;
};

constexpr std::size_t kChunkSize = 1024;

}  // namespace

const char* to_string(BlockCase c) {
  static constexpr const char* names[] = {"I", "II", "III", "IV", "V", "VI", "VII"};
  return names[static_cast<int>(c)];
}

int SpectralBlock::count_in_degree(int k) const {
  return static_cast<int>(std::count_if(bidegrees.begin(), bidegrees.end(),
                                        [k](const Bidegree& b) { return b.s + b.t == k; }));
}

Rational eigenvalue(int n, int q, int j, int i, int p) {
  const std::int64_t gap = n - i - j;
  if (gap == 0) throw DomainError("eigenvalue: i + j == n gives a zero denominator");
  const std::int64_t root = static_cast<std::int64_t>(p + i) * (q + n - i) +
                            static_cast<std::int64_t>(q + j) * (p + n - j);
  return Rational(root * root, 4 * gap * gap);
}

SpectralBlock make_block(int n, BlockCase kind, int q, int j, int i, int p) {
  const BlockParams params{kind, q, j, i, p};
  if (n < 1 || !in_range(n, params)) {
    throw DomainError(std::string("parameters (q, j, i, p) = (") + std::to_string(q) + ", " +
                      std::to_string(j) + ", " + std::to_string(i) + ", " + std::to_string(p) +
                      ") are outside Case " + to_string(kind) + " for n = " + std::to_string(n));
  }
  return build(n, params);
}

void for_each_block(int n, int pmax, int qmax,
                    const std::function<void(const SpectralBlock&)>& visit) {
  if (n < 1) throw DomainError("for_each_block: n must be >= 1");
  if (pmax < 1 || qmax < 1) throw DomainError("for_each_block: pmax and qmax must be >= 1");
  for (const BlockParams& b : enumerate_parameters(n, pmax, qmax)) visit(build(n, b));
}

std::vector<SpectralBlock> enumerate_blocks(const LensSpace& lens, int pmax, int qmax) {
  std::vector<SpectralBlock> out;
  for_each_block(lens.n(), pmax, qmax, [&](const SpectralBlock& b) { out.push_back(b); });
  return out;
}

std::int64_t block_multiplicity(const SpectralBlock& block, const LensSpace& lens, std::int64_t u,
                                int k) {
  if (k < 0 || k > lens.n()) throw DomainError("block_multiplicity: degree out of range [0, n]");
  const int count = block.count_in_degree(k);
  if (count == 0) return 0;
  return fixed_dim(block.weight, lens, u) * count;
}

unsigned default_thread_count() {
  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TORSION_THREADS")) {
    char* end = nullptr;
    const long requested = std::strtol(env, &end, 10);
    if (end != env && requested > 0) {
      return std::min(hardware, static_cast<unsigned>(requested));
    }
  }
  return hardware;
}

std::vector<KappaDirect> kappa_direct_all(const LensSpace& lens, double s, int pmax, int qmax,
                                          const KappaDirectOptions& options) {
  const int n = lens.n();
  if (!(s >= n + 2)) {
    throw DomainError("kappa_direct: needs real s >= n + 2 for absolute convergence");
  }
  if (pmax < 16 || qmax < 16) throw DomainError("kappa_direct: pmax and qmax must be >= 16");

  const auto mu = static_cast<std::size_t>(lens.mu());
  const auto degrees = static_cast<std::size_t>(n + 1);
  const std::vector<BlockParams> params = enumerate_parameters(n, pmax, qmax);
  const CharacterEvaluator at_generator(TorusElement::generator_power(lens, 1), pmax + qmax + n + 1);

  const std::size_t chunks = (params.size() + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkSums> partial(chunks);

  const auto run_chunk = [&](std::size_t c) {
    ChunkSums sums;
    sums.zeta.assign(mu * degrees, 0.0);
    sums.shell.assign(mu, 0.0);
    sums.harmonic.assign(mu, 0.0);
    const std::size_t end = std::min(params.size(), (c + 1) * kChunkSize);
    for (std::size_t b = c * kChunkSize; b < end; ++b) {
      const BlockParams& block = params[b];
      if (!options.cases.contains(block.kind)) continue;
      const HighestWeight weight = HighestWeight::family(n, block.q, block.j, block.i, block.p);
      const FixedDimensions dims = fixed_dimensions(at_generator, weight);
      std::int64_t total = 0;
      for (std::int64_t d : dims.by_character) total += d;
      if (total != dims.dimension) {
        throw IntegralityError("kappa_direct: fixed dimensions do not add up to dim V");
      }
      sums.max_defect = std::max(sums.max_defect, dims.max_defect);
      ++sums.weights;

      if (block.kind == BlockCase::I) {
        // Harmonic constants: excluded from zeta(Delta), present in kappa as -(n+1) dim V^{alpha_u}.
        for (std::size_t u = 0; u < mu; ++u) {
          sums.harmonic[u] -= static_cast<double>(n + 1) * static_cast<double>(dims.by_character[u]);
        }
        continue;
      }
      const Rational lambda = eigenvalue(n, block.q, block.j, block.i, block.p);
      const double power = std::pow(boost::rational_cast<double>(lambda), -s);
      const bool outer = in_outer_shell(block, pmax, qmax);
      for (const Bidegree& bd : bidegrees_of(block, n)) {
        const int k = bd.s + bd.t;
        for (std::size_t u = 0; u < mu; ++u) {
          const double term = static_cast<double>(dims.by_character[u]) * power;
          sums.zeta[u * degrees + static_cast<std::size_t>(k)] += term;
          if (outer) sums.shell[u] += std::abs(degree_coefficient(n, k)) * term;
        }
      }
    }
    partial[c] = std::move(sums);
  };

  unsigned workers = options.threads != 0 ? options.threads : default_thread_count();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(chunks, 1)));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t c = next++; c < chunks; c = next++) run_chunk(c);
        } catch (...) {
          failures[w] = std::current_exception();
          next = chunks;
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }

  // Reduce in chunk order.
  std::vector<double> zeta(mu * degrees, 0.0);
  std::vector<double> shell(mu, 0.0);
  std::vector<double> harmonic(mu, 0.0);
  double max_defect = 0.0;
  std::int64_t weights = 0;
  for (const ChunkSums& sums : partial) {
    for (std::size_t x = 0; x < zeta.size(); ++x) zeta[x] += sums.zeta[x];
    for (std::size_t u = 0; u < mu; ++u) {
      shell[u] += sums.shell[u];
      harmonic[u] += sums.harmonic[u];
    }
    max_defect = std::max(max_defect, sums.max_defect);
    weights += sums.weights;
  }

  std::vector<KappaDirect> out(mu);
  for (std::size_t u = 0; u < mu; ++u) {
    double value = harmonic[u];
    for (std::size_t k = 0; k < degrees; ++k) {
      value += degree_coefficient(n, static_cast<int>(k)) * zeta[u * degrees + k];
    }
    KappaDirect& r = out[u];
    r.value = value;
    r.tail = shell[u];
    r.converged = r.tail <= 1e-4 * std::abs(value) || r.tail == 0.0;
    r.max_integrality_defect = max_defect;
    r.weights_checked = weights;
  }
  return out;
}

KappaDirect kappa_direct(const LensSpace& lens, std::int64_t u, double s, int pmax, int qmax,
                         const KappaDirectOptions& options) {
  auto all = kappa_direct_all(lens, s, pmax, qmax, options);
  return all[static_cast<std::size_t>(reduce_mod(u, lens.mu()))];
}

bool check_cancellation(int n) {
  if (n < 1) throw DomainError("check_cancellation: n must be >= 1");
  const auto net = [n](const SpectralBlock& block) {
    int total = 0;
    for (const Bidegree& b : block.bidegrees) total += degree_coefficient(n, b.s + b.t);
    return total;
  };
  for (int i = 0; i <= n - 2; ++i) {
    for (int j = 0; i + j <= n - 2; ++j) {
      if (net(make_block(n, BlockCase::II, 1, j, i, 1)) != 0) return false;
    }
  }
  for (int i = 0; i <= n - 1; ++i) {
    if (net(make_block(n, BlockCase::V, 1, n - 1 - i, i, 1)) != 0) return false;
  }
  return true;
}

}  // namespace lenstorsion
