#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "coapprox/projection.hpp"

namespace coapprox {

struct IterationConfig {
  std::size_t max_iter = 10000;
  double tol = 1e-8;
  double relaxation = 0.5;  // in (0, 1]
};

// Convex combination of nonexpansive maps. Fixed points always contain the
// intersection of the component fixed-point sets; equality needs either the
// hull condition on the y vectors or a strictly convex ambient norm.
class AveragedMap {
 public:
  AveragedMap(Space space, std::vector<HalfSpaceProjection> projections,
              std::optional<std::vector<double>> weights = std::nullopt);
  AveragedMap(Space space, std::vector<std::function<Vec(const Vec&)>> maps,
              std::vector<double> weights);

  Vec operator()(const Vec& x) const;

  std::size_t size() const { return maps_.size(); }
  const Space& space() const { return space_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<HalfSpaceProjection>& projections() const { return projections_; }

 private:
  Space space_;
  std::vector<std::function<Vec(const Vec&)>> maps_;
  std::vector<double> weights_;
  std::vector<HalfSpaceProjection> projections_;  // kept when built from projections
};

// Geometric weights 2^-k, renormalized to sum to one.
std::vector<double> default_weights(std::size_t count);

// Exact decision via a feasibility solve over hull coefficients.
bool zero_in_hull(const std::vector<Vec>& ys);

struct FixedPointResult {
  Vec point;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;  // false = iteration budget exhausted, a signal
};

// Relaxed iteration x <- (1 - lambda) x + lambda Q x until the step norm
// drops below tol. residual_trace, when given, receives the step norms.
FixedPointResult fixed_point(const AveragedMap& q, const Vec& x0,
                             const IterationConfig& cfg,
                             std::vector<double>* residual_trace = nullptr);

FixedPointResult project_onto_intersection(
    const std::vector<HalfSpaceProjection>& projections, const Vec& x,
    const IterationConfig& cfg, std::vector<double>* residual_trace = nullptr);

struct FixCheckReport {
  std::size_t trials = 0;
  std::size_t converged = 0;
  std::size_t violations = 0;
  double worst_violation = 0.0;
  std::vector<Vec> violators;
};

// Samples starting points, iterates to a fixed point, and checks membership
// of the limit in every half-space. Meaningful for strictly convex norms,
// where fixed points of the average must lie in the intersection.
FixCheckReport strictly_convex_fix_check(
    const std::vector<HalfSpaceProjection>& projections, const Space& space,
    std::size_t trials, std::uint64_t seed, const IterationConfig& cfg = {});

}  // namespace coapprox
