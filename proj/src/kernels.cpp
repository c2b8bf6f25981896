#include "coapprox/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "coapprox/errors.hpp"
#include "coapprox/omp_shim.hpp"
#include "coapprox/rng.hpp"

namespace coapprox {
namespace kernels {

int thread_cap() {
  static const int cap = [] {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("COAPPROX_THREADS")) {
      const int req = std::atoi(env);
      if (req >= 1 && req < n) n = req;
    }
    return n;
  }();
  return cap;
}

FlatPoints flatten(const std::vector<Vec>& points) {
  FlatPoints fp;
  if (points.empty()) return fp;
  fp.count = points.size();
  fp.dim = points.front().size();
  fp.data.resize(fp.count * fp.dim);
  for (std::size_t i = 0; i < fp.count; ++i) {
    if (points[i].size() != fp.dim)
      throw DimensionMismatch("flatten: ragged point list");
    for (std::size_t j = 0; j < fp.dim; ++j) fp.data[i * fp.dim + j] = points[i][j];
  }
  return fp;
}

namespace {

// Allocation-free norm of (a - b); the Lp fallback pays a pow per entry.
struct DiffNorm {
  NormKind kind;
  double p;
  std::size_t n;

  explicit DiffNorm(const Space& s) : kind(s.kind()), p(s.p()), n(s.dim()) {
    if (kind == NormKind::GaugeBody)
      throw std::invalid_argument("kernels: gauge-body norms are not kernel-eligible");
  }

  double operator()(const double* a, const double* b) const {
    if (kind == NormKind::LInf) {
      double m = 0.0;
      for (std::size_t j = 0; j < n; ++j) m = std::max(m, std::abs(a[j] - b[j]));
      return m;
    }
    if (p == 1.0) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += std::abs(a[j] - b[j]);
      return s;
    }
    if (p == 2.0) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double d = a[j] - b[j];
        s += d * d;
      }
      return std::sqrt(s);
    }
    double m = 0.0;
    for (std::size_t j = 0; j < n; ++j) m = std::max(m, std::abs(a[j] - b[j]));
    if (m == 0.0) return 0.0;
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += std::pow(std::abs(a[j] - b[j]) / m, p);
    return m * std::pow(s, 1.0 / p);
  }
};

struct RatioSample {
  double ratio;
  std::size_t index;
  bool counted;
};

RatioSample pair_ratio_at(const std::function<Vec(const Vec&)>& map, const Space& space,
                          std::uint64_t seed, std::size_t i, double half_width) {
  Rng rng(stream_seed(seed, i));
  const Vec x = rng.box(space.dim(), half_width);
  const Vec z = rng.box(space.dim(), half_width);
  const double den = space.norm(sub(x, z));
  if (den < 1e-6) return {0.0, i, false};
  const double num = space.norm(sub(map(x), map(z)));
  return {num / den, i, true};
}

void merge_max(double& best, std::size_t& best_idx, double v, std::size_t idx) {
  if (v > best || (v == best && idx < best_idx)) {
    best = v;
    best_idx = idx;
  }
}

}  // namespace

PairSweepResult max_pair_ratio(const std::function<Vec(const Vec&)>& map,
                               const Space& space, std::size_t pairs,
                               std::uint64_t seed, double half_width, Exec exec) {
  PairSweepResult out;
  out.worst_index = pairs;
  double best = -1.0;
  std::size_t best_idx = pairs;
  std::size_t used = 0;

  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < pairs; ++i) {
      const RatioSample s = pair_ratio_at(map, space, seed, i, half_width);
      if (!s.counted) continue;
      ++used;
      merge_max(best, best_idx, s.ratio, s.index);
    }
  } else {
    [[maybe_unused]] const int nt = thread_cap();
#pragma omp parallel num_threads(nt)
    {
      double lbest = -1.0;
      std::size_t lidx = pairs;
      std::size_t lused = 0;
#pragma omp for schedule(static)
      for (long long i = 0; i < static_cast<long long>(pairs); ++i) {
        const RatioSample s =
            pair_ratio_at(map, space, seed, static_cast<std::size_t>(i), half_width);
        if (!s.counted) continue;
        ++lused;
        merge_max(lbest, lidx, s.ratio, s.index);
      }
#pragma omp critical
      {
        used += lused;
        if (lidx != pairs) merge_max(best, best_idx, lbest, lidx);
      }
    }
  }
  out.max_ratio = (best_idx == pairs) ? 0.0 : best;
  out.worst_index = best_idx;
  out.pairs_used = used;
  return out;
}

namespace {

double projection_ratio(const DiffNorm& nd, const Space& space, const Vec& f,
                        const Vec& y, const double* w, double* tmp, const double* zero) {
  const std::size_t n = f.size();
  double fw = 0.0;
  for (std::size_t j = 0; j < n; ++j) fw += f[j] * w[j];
  for (std::size_t j = 0; j < n; ++j) tmp[j] = w[j] - fw * y[j];
  const double den = nd(w, zero);
  if (den < 1e-12) return 0.0;
  (void)space;
  return nd(tmp, zero) / den;
}

}  // namespace

double op_norm_estimate(const Space& space, const Vec& f, const Vec& y,
                        std::size_t samples, std::uint64_t seed, Exec exec) {
  const std::size_t n = space.dim();
  if (f.size() != n || y.size() != n)
    throw DimensionMismatch("op_norm_estimate: dimension mismatch");
  const DiffNorm nd(space);
  const Vec zero = zeros(n);

  // Deterministic witness set: sign vectors and coordinate axes.
  std::vector<Vec> witnesses;
  if (n <= 16) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Vec w(n);
      for (std::size_t j = 0; j < n; ++j) w[j] = (mask >> j) & 1 ? 1.0 : -1.0;
      witnesses.push_back(std::move(w));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    witnesses.push_back(unit_vector(n, j, 1.0));
    witnesses.push_back(unit_vector(n, j, -1.0));
  }

  double best = 0.0;
  Vec tmp(n);
  for (const auto& w : witnesses)
    best = std::max(best, projection_ratio(nd, space, f, y, w.data(), tmp.data(),
                                           zero.data()));

  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < samples; ++i) {
      const Vec w = lowdisc_direction(n, i, seed);
      best = std::max(best, projection_ratio(nd, space, f, y, w.data(), tmp.data(),
                                             zero.data()));
    }
    return best;
  }

  [[maybe_unused]] const int nt = thread_cap();
  double global = best;
#pragma omp parallel num_threads(nt)
  {
    double lbest = 0.0;
    Vec ltmp(n);
#pragma omp for schedule(static)
    for (long long i = 0; i < static_cast<long long>(samples); ++i) {
      const Vec w = lowdisc_direction(n, static_cast<std::size_t>(i), seed);
      lbest = std::max(lbest, projection_ratio(nd, space, f, y, w.data(), ltmp.data(),
                                               zero.data()));
    }
#pragma omp critical
    global = std::max(global, lbest);
  }
  return global;
}

namespace {

// max over refs of |d - c| - |x - c| with early exit above stop_above.
double candidate_margin(const DiffNorm& nd, const FlatPoints& refs, const double* d,
                        const double* x, double stop_above) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < refs.count; ++c) {
    const double* pc = refs.row(c);
    const double v = nd(d, pc) - nd(x, pc);
    if (v > worst) {
      worst = v;
      if (worst > stop_above) return worst;
    }
  }
  return worst;
}

// Lock-free monotone minimum for the branch-and-bound bound.
void atomic_fetch_min(std::atomic<double>& a, double v) {
  double cur = a.load(std::memory_order_relaxed);
  while (v < cur && !a.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

}  // namespace

double max_margin(const Space& space, const FlatPoints& refs, const Vec& d,
                  const Vec& x, double stop_above, Exec exec) {
  const DiffNorm nd(space);
  if (d.size() != refs.dim || x.size() != refs.dim)
    throw DimensionMismatch("max_margin: dimension mismatch");
  if (exec == Exec::Serial || refs.count < 4096)
    return candidate_margin(nd, refs, d.data(), x.data(), stop_above);

  [[maybe_unused]] const int nt = thread_cap();
  double global = -std::numeric_limits<double>::infinity();
#pragma omp parallel num_threads(nt)
  {
    double lworst = -std::numeric_limits<double>::infinity();
#pragma omp for schedule(static)
    for (long long c = 0; c < static_cast<long long>(refs.count); ++c) {
      const double* pc = refs.row(static_cast<std::size_t>(c));
      const double v = nd(d.data(), pc) - nd(x.data(), pc);
      if (v > lworst) lworst = v;
    }
#pragma omp critical
    global = std::max(global, lworst);
  }
  return global;
}

ScanResult min_max_margin(const Space& space, const FlatPoints& candidates,
                          const FlatPoints& refs, const Vec& x,
                          std::ptrdiff_t warm_start, Exec exec) {
  if (candidates.count == 0 || refs.count == 0)
    throw std::invalid_argument("min_max_margin: empty point set");
  if (candidates.dim != refs.dim || x.size() != refs.dim)
    throw DimensionMismatch("min_max_margin: dimension mismatch");
  const DiffNorm nd(space);
  const double inf = std::numeric_limits<double>::infinity();

  double seed_bound = inf;
  if (warm_start >= 0 && static_cast<std::size_t>(warm_start) < candidates.count)
    seed_bound = candidate_margin(nd, refs, candidates.row(warm_start), x.data(), inf);

  if (exec == Exec::Serial) {
    double best = inf;
    std::size_t best_idx = candidates.count;
    if (seed_bound < inf) {
      best = seed_bound;
      best_idx = static_cast<std::size_t>(warm_start);
    }
    for (std::size_t d = 0; d < candidates.count; ++d) {
      const double m = candidate_margin(nd, refs, candidates.row(d), x.data(), best);
      if (m < best || (m == best && d < best_idx)) {
        best = m;
        best_idx = d;
      }
    }
    return {best, best_idx};
  }

  std::atomic<double> bound(seed_bound);
  double best = inf;
  std::size_t best_idx = candidates.count;
  if (seed_bound < inf) best_idx = static_cast<std::size_t>(warm_start), best = seed_bound;

  [[maybe_unused]] const int nt = thread_cap();
#pragma omp parallel num_threads(nt)
  {
    double lbest = inf;
    std::size_t lidx = candidates.count;
#pragma omp for schedule(dynamic, 64)
    for (long long d = 0; d < static_cast<long long>(candidates.count); ++d) {
      const double cutoff = bound.load(std::memory_order_relaxed);
      const double m = candidate_margin(nd, refs, candidates.row(d), x.data(), cutoff);
      if (m > cutoff) continue;  // pruned; cannot be the minimum
      if (m < lbest || (m == lbest && static_cast<std::size_t>(d) < lidx)) {
        lbest = m;
        lidx = static_cast<std::size_t>(d);
        atomic_fetch_min(bound, m);
      }
    }
#pragma omp critical
    {
      if (lbest < best || (lbest == best && lidx < best_idx)) {
        best = lbest;
        best_idx = lidx;
      }
    }
  }
  return {best, best_idx};
}

}  // namespace kernels
}  // namespace coapprox
