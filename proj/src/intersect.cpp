#include "coapprox/intersect.hpp"

#include <cmath>
#include <stdexcept>

#include "coapprox/errors.hpp"
#include "coapprox/rng.hpp"
#include "coapprox/simplex.hpp"

namespace coapprox {

std::vector<double> default_weights(std::size_t count) {
  if (count == 0) throw std::invalid_argument("default_weights: empty family");
  std::vector<double> w(count);
  double sum = 0.0;
  double v = 0.5;
  for (std::size_t k = 0; k < count; ++k, v *= 0.5) {
    w[k] = v;
    sum += v;
  }
  for (auto& x : w) x /= sum;
  return w;
}

AveragedMap::AveragedMap(Space space, std::vector<HalfSpaceProjection> projections,
                         std::optional<std::vector<double>> weights)
    : space_(std::move(space)) {
  if (projections.empty()) throw std::invalid_argument("AveragedMap: empty family");
  weights_ = weights ? std::move(*weights) : default_weights(projections.size());
  if (weights_.size() != projections.size())
    throw std::invalid_argument("AveragedMap: weight count mismatch");
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0)) throw std::invalid_argument("AveragedMap: weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("AveragedMap: weights must sum to 1");
  projections_ = std::move(projections);
  for (const auto& p : projections_) {
    if (p.halfspace.f.dim() != space_.dim())
      throw DimensionMismatch("AveragedMap: projection dimension mismatch");
    maps_.emplace_back(p);
  }
}

AveragedMap::AveragedMap(Space space, std::vector<std::function<Vec(const Vec&)>> maps,
                         std::vector<double> weights)
    : space_(std::move(space)), maps_(std::move(maps)), weights_(std::move(weights)) {
  if (maps_.empty()) throw std::invalid_argument("AveragedMap: empty family");
  if (weights_.size() != maps_.size())
    throw std::invalid_argument("AveragedMap: weight count mismatch");
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0)) throw std::invalid_argument("AveragedMap: weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("AveragedMap: weights must sum to 1");
}

Vec AveragedMap::operator()(const Vec& x) const {
  Vec acc = zeros(x.size());
  for (std::size_t k = 0; k < maps_.size(); ++k) axpy(weights_[k], maps_[k](x), acc);
  return acc;
}

bool zero_in_hull(const std::vector<Vec>& ys) {
  if (ys.empty()) throw std::invalid_argument("zero_in_hull: empty list");
  return in_convex_hull(ys, zeros(ys.front().size()));
}

FixedPointResult fixed_point(const AveragedMap& q, const Vec& x0,
                             const IterationConfig& cfg,
                             std::vector<double>* residual_trace) {
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("fixed_point: tol must be > 0");
  if (!(cfg.relaxation > 0.0 && cfg.relaxation <= 1.0))
    throw std::invalid_argument("fixed_point: relaxation must be in (0, 1]");
  Vec x = x0;
  const double lambda = cfg.relaxation;
  for (std::size_t it = 1; it <= cfg.max_iter; ++it) {
    const Vec qx = q(x);
    Vec next = scaled(x, 1.0 - lambda);
    axpy(lambda, qx, next);
    const double residual = q.space().norm(sub(next, x));
    if (residual_trace) residual_trace->push_back(residual);
    x = std::move(next);
    if (residual <= cfg.tol) return {std::move(x), it, residual, true};
  }
  const double residual = q.space().norm(sub(q(x), x)) * lambda;
  return {std::move(x), cfg.max_iter, residual, false};
}

FixedPointResult project_onto_intersection(
    const std::vector<HalfSpaceProjection>& projections, const Vec& x,
    const IterationConfig& cfg, std::vector<double>* residual_trace) {
  if (projections.empty())
    throw std::invalid_argument("project_onto_intersection: empty family");
  AveragedMap q(projections.front().halfspace.space, projections);
  return fixed_point(q, x, cfg, residual_trace);
}

FixCheckReport strictly_convex_fix_check(
    const std::vector<HalfSpaceProjection>& projections, const Space& space,
    std::size_t trials, std::uint64_t seed, const IterationConfig& cfg) {
  FixCheckReport report;
  report.trials = trials;
  AveragedMap q(space, projections);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(stream_seed(seed, t));
    const Vec x0 = rng.box(space.dim(), 2.0);
    const FixedPointResult res = fixed_point(q, x0, cfg);
    if (!res.converged) continue;
    ++report.converged;
    double worst = 0.0;
    for (const auto& p : projections)
      worst = std::max(worst, p.halfspace.f(res.point) - p.halfspace.level);
    if (worst > 1e-6) {
      ++report.violations;
      if (report.violators.size() < 16) report.violators.push_back(res.point);
    }
    report.worst_violation = std::max(report.worst_violation, worst);
  }
  return report;
}

}  // namespace coapprox
