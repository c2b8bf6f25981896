#include "coapprox/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "coapprox/errors.hpp"
#include "coapprox/rng.hpp"

namespace coapprox {

SampledSet make_sampled_set(std::vector<Vec> points, Provenance provenance,
                            double resolution, double truncation_radius) {
  if (points.empty()) throw std::invalid_argument("make_sampled_set: empty set");
  SampledSet s;
  s.points = std::move(points);
  s.flat = kernels::flatten(s.points);
  s.provenance = provenance;
  s.resolution = resolution;
  s.truncation_radius = truncation_radius;
  // Pairwise distinctness is guaranteed for grids; spot-check small lists.
  if (provenance == Provenance::Explicit && s.points.size() <= 4096) {
    const double tol = resolution > 0.0 ? resolution / 10.0 : 0.0;
    for (std::size_t i = 0; i < s.points.size(); ++i)
      for (std::size_t j = i + 1; j < s.points.size(); ++j)
        if (linf_norm(sub(s.points[i], s.points[j])) <= tol)
          throw std::invalid_argument("make_sampled_set: duplicate sample points");
  }
  return s;
}

SampledSet grid_on_span(const Space& space, const std::vector<Vec>& basis, double h,
                        double R) {
  if (basis.empty()) throw std::invalid_argument("grid_on_span: empty basis");
  if (!(h > 0.0) || !(R > 0.0))
    throw std::invalid_argument("grid_on_span: need h > 0 and R > 0");
  const std::size_t k = basis.size();
  const std::size_t n = basis.front().size();
  for (const auto& b : basis)
    if (b.size() != n) throw DimensionMismatch("grid_on_span: ragged basis");

  const long long steps = static_cast<long long>(std::llround(2.0 * R / h));
  std::vector<Vec> pts;
  std::vector<long long> idx(k, 0);
  while (true) {
    Vec p = zeros(n);
    for (std::size_t i = 0; i < k; ++i) {
      const double t = -R + static_cast<double>(idx[i]) * h;
      axpy(t, basis[i], p);
    }
    if (space.norm(p) <= R + 1e-12) pts.push_back(std::move(p));
    std::size_t carry = 0;
    while (carry < k) {
      if (++idx[carry] <= steps) break;
      idx[carry] = 0;
      ++carry;
    }
    if (carry == k) break;
  }
  SampledSet s;
  s.points = std::move(pts);
  s.flat = kernels::flatten(s.points);
  s.provenance = Provenance::Grid;
  s.resolution = h;
  s.truncation_radius = R;
  return s;
}

bool is_coapprox(const Space& space, const SampledSet& F, const Vec& d, const Vec& x,
                 double tol) {
  const double m =
      kernels::max_margin(space, F.flat, d, x, tol, kernels::Exec::Parallel);
  return m <= tol;
}

namespace {

std::size_t nearest_index(const Space& space, const SampledSet& F, const Vec& x) {
  std::size_t best = 0;
  double bestd = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < F.points.size(); ++i) {
    const double d = space.norm(sub(F.points[i], x));
    if (d < bestd) {
      bestd = d;
      best = i;
    }
  }
  return best;
}

}  // namespace

CoapproxReport find_coapprox(const Space& space, const SampledSet& F, const Vec& x,
                             std::ptrdiff_t warm_start) {
  if (F.points.empty()) throw std::invalid_argument("find_coapprox: empty set");
  const std::ptrdiff_t warm =
      warm_start >= 0 ? warm_start
                      : static_cast<std::ptrdiff_t>(nearest_index(space, F, x));
  const kernels::ScanResult scan =
      kernels::min_max_margin(space, F.flat, F.flat, x, warm, kernels::Exec::Parallel);
  CoapproxReport rep;
  rep.query = x;
  rep.best = F.points[scan.index];
  rep.margin = scan.margin;
  rep.samples = F.points.size();
  rep.resolution = F.resolution;
  rep.truncation_radius = F.truncation_radius;
  return rep;
}

std::optional<Vec> find_coapprox_near(const Space& space, const SampledSet& F,
                                      const Vec& x, double tol) {
  std::vector<std::pair<double, std::size_t>> order;
  order.reserve(F.points.size());
  for (std::size_t i = 0; i < F.points.size(); ++i)
    order.emplace_back(space.norm(sub(F.points[i], x)), i);
  std::sort(order.begin(), order.end());
  for (const auto& [dist, i] : order) {
    const double m =
        kernels::max_margin(space, F.flat, F.points[i], x, tol, kernels::Exec::Serial);
    if (m <= tol) return F.points[i];
  }
  return std::nullopt;
}

OptimalityResult is_optimal_point(const Space& space, const SampledSet& F, const Vec& z,
                                  std::size_t trial_budget, std::uint64_t seed) {
  const double eps = 1e-12;
  const double min_sep = 1e-6;
  const auto margin_of = [&](const Vec& x) {
    return kernels::max_margin(space, F.flat, x, z, eps, kernels::Exec::Serial);
  };
  const auto emit = [&](const Vec& x) -> std::optional<Vec> {
    if (space.norm(sub(x, z)) >= min_sep && margin_of(x) <= eps) return x;
    return std::nullopt;
  };

  // Sample points of F near z are the natural dominator candidates.
  std::vector<std::pair<double, std::size_t>> order;
  order.reserve(F.points.size());
  for (std::size_t i = 0; i < F.points.size(); ++i)
    order.emplace_back(space.norm(sub(F.points[i], z)), i);
  std::sort(order.begin(), order.end());
  const std::size_t direct = std::min<std::size_t>(16, order.size());
  for (std::size_t i = 0; i < direct; ++i)
    if (auto w = emit(F.points[order[i].second])) return {false, w};

  // Coordinate descent on the worst-case margin from scattered starts.
  Rng rng(stream_seed(seed, 0));
  std::size_t evals = 0;
  const std::size_t n = z.size();
  for (std::size_t trial = 0; trial < trial_budget && evals < 64 * trial_budget;
       ++trial) {
    Vec x = (trial == 0 && !order.empty()) ? F.points[order.front().second]
                                           : add(z, rng.box(n, 1.0));
    double val = margin_of(x);
    ++evals;
    double step = 0.5;
    for (int round = 0; round < 12 && step > 1e-7; ++round) {
      bool improved = false;
      for (std::size_t j = 0; j < n; ++j) {
        for (double dir : {1.0, -1.0}) {
          Vec cand = x;
          cand[j] += dir * step;
          const double v = margin_of(cand);
          ++evals;
          if (v < val) {
            val = v;
            x = std::move(cand);
            improved = true;
          }
        }
      }
      if (!improved) step *= 0.5;
      if (val <= eps) {
        if (auto w = emit(x)) return {false, w};
      }
    }
    if (val <= eps) {
      if (auto w = emit(x)) return {false, w};
    }
  }
  return {true, std::nullopt};
}

namespace {

std::vector<Vec> counterexample_candidates() {
  std::vector<Vec> xs;
  for (std::size_t mask = 0; mask < 16; ++mask) {
    Vec x(4);
    for (std::size_t j = 0; j < 4; ++j) x[j] = (mask >> j) & 1 ? 1.0 : -1.0;
    xs.push_back(std::move(x));
  }
  for (std::size_t j = 0; j < 4; ++j) {
    xs.push_back(unit_vector(4, j, 1.0));
    xs.push_back(unit_vector(4, j, -1.0));
  }
  for (std::size_t i = 0; i < 32; ++i) {
    Vec x = lowdisc_direction(4, i, 5150);
    const double m = linf_norm(x);
    if (m > 1e-9) xs.push_back(scaled(x, 1.0 / m));
  }
  return xs;
}

}  // namespace

CounterexampleResult verify_counterexample_linf4(double h, double R,
                                                 std::uint64_t seed) {
  const Space space = Space::linf(4);
  // ker(f1) cap ker(f2) with f1 = (1,0,0,0), f2 = (1/2,1/6,1/6,1/6) is the
  // plane {x1 = 0, x2 + x3 + x4 = 0}.
  const std::vector<Vec> basis = {{0.0, 1.0, -1.0, 0.0}, {0.0, 0.0, 1.0, -1.0}};
  const SampledSet fine = grid_on_span(space, basis, h, R);
  const double hc = std::max(5.0 * h, 0.25);
  const SampledSet coarse = grid_on_span(space, basis, hc, R);

  const std::vector<Vec> candidates = counterexample_candidates();
  CounterexampleResult out;
  out.resolution = h;
  out.truncation_radius = R;
  out.seed = seed;

  double best_margin = -std::numeric_limits<double>::infinity();
  std::size_t best_idx = candidates.size();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const kernels::ScanResult scan = kernels::min_max_margin(
        space, coarse.flat, coarse.flat, candidates[i], -1, kernels::Exec::Parallel);
    out.candidate_margins.emplace_back(candidates[i], scan.margin);
    if (scan.margin > best_margin) {
      best_margin = scan.margin;
      best_idx = i;
    }
  }
  if (best_idx == candidates.size() || best_margin <= 0.0)
    throw SearchExhausted(
        "verify_counterexample_linf4: no candidate with positive coarse margin");

  const Vec witness = candidates[best_idx];
  const kernels::ScanResult certify = kernels::min_max_margin(
      space, fine.flat, fine.flat, witness, -1, kernels::Exec::Parallel);
  out.witness = witness;
  out.margin_grid = certify.margin;
  out.margin_certified = certify.margin - h;
  if (out.margin_certified <= 0.0)
    throw SearchExhausted(
        "verify_counterexample_linf4: margin does not clear the grid slack; "
        "refine h or enlarge R");
  return out;
}

CoapproxReport counterexample_control_ker_e1(const Vec& x, double h, double R) {
  if (x.size() != 4)
    throw DimensionMismatch("counterexample_control_ker_e1: need dimension 4");
  const Space space = Space::linf(4);
  const std::vector<Vec> basis = {unit_vector(4, 1), unit_vector(4, 2),
                                  unit_vector(4, 3)};
  const SampledSet grid = grid_on_span(space, basis, h, R);
  // Warm start at the coordinate projection of x, snapped to the grid.
  Vec proj = x;
  proj[0] = 0.0;
  std::size_t warm = nearest_index(space, grid, proj);
  return find_coapprox(space, grid, x, static_cast<std::ptrdiff_t>(warm));
}

Vec nonconvex_projection_linf2(const Vec& v) {
  if (v.size() != 2) throw DimensionMismatch("nonconvex_projection_linf2: need length 2");
  const double x = v[0];
  const double y = v[1];
  if (std::abs(y) <= std::abs(x)) return v;
  const double sy = (y >= 0.0) ? 1.0 : -1.0;  // sgn(0) = +1
  if (x >= 0.0) return Vec{x, sy * x};
  return Vec{x, -sy * x};
}

SweepReport nonexpansiveness_sweep(const std::function<Vec(const Vec&)>& map,
                                   const Space& space, std::size_t pairs,
                                   std::uint64_t seed, double half_width) {
  const kernels::PairSweepResult res = kernels::max_pair_ratio(
      map, space, pairs, seed, half_width, kernels::Exec::Parallel);
  SweepReport rep;
  rep.max_ratio = res.max_ratio;
  rep.pairs = pairs;
  rep.pairs_used = res.pairs_used;
  rep.seed = seed;
  if (res.worst_index < pairs) {
    Rng rng(stream_seed(seed, res.worst_index));
    rep.worst_x = rng.box(space.dim(), half_width);
    rep.worst_z = rng.box(space.dim(), half_width);
  }
  return rep;
}

}  // namespace coapprox
