#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "coapprox/body.hpp"

namespace coapprox {

// Linear projection w -> w - f(w) y onto ker(f), where f(y) = 1.
struct KernelProjection {
  Functional f;
  Vec y;

  Vec operator()(const Vec& w) const;
};

KernelProjection make_kernel_projection(Functional f, Vec y);

// Retraction onto {f <= level}: identity inside, x - f(x - anchor) y outside,
// where f(anchor) = level. Nonexpansive exactly when the paired kernel
// projection has operator norm one; `certified` records the sampled check.
struct HalfSpaceProjection {
  HalfSpace halfspace;
  Vec y;
  Vec anchor;
  bool certified = false;
  double certificate = 0.0;  // sampled operator norm of the kernel projection

  Vec operator()(const Vec& x) const;
  KernelProjection kernel() const { return {halfspace.f, y}; }
};

HalfSpaceProjection make_halfspace_projection(const HalfSpace& hs, Vec y,
                                              bool certify = true,
                                              std::size_t certify_samples = 20000,
                                              std::uint64_t seed = 23);

// Normalizes the functional, finds y through the projection search (closed
// forms first) and certifies the pairing. Throws CertificationFailure when
// no norm-one projection turns up.
HalfSpaceProjection certify_halfspace_projection(const Space& space, Vec coeffs,
                                                 double level,
                                                 std::uint64_t seed = 23);

// ker(f) is one-complemented in l_1^n iff f has at most two nonzero
// coordinates (relative threshold 1e-12).
bool one_complemented_hyperplane_l1(const Vec& f);

// ker(f) is one-complemented in l_inf^n iff some coordinate dominates:
// |f_j| >= sum_{i != j} |f_i|, equality included.
bool one_complemented_hyperplane_linf(const Vec& f);

// Smallest dominating coordinate, if any.
std::optional<std::size_t> dominated_coordinate(const Vec& f);

struct ProjectionSearchBudget {
  std::size_t restarts = 200;
  std::size_t max_evals = 5000;      // objective evaluations across restarts
  std::size_t search_samples = 512;  // cheap sampling during the descent
  std::size_t certify_samples = 20000;
};

struct ProjectionSearchResult {
  std::optional<KernelProjection> projection;  // set iff certified norm <= 1 + 1e-6
  double norm_estimate = 0.0;  // sampled operator norm of the best y found
  Vec best_y;

  bool found() const { return projection.has_value(); }
};

// Searches for y with f(y) = 1 making w -> w - f(w) y a norm-one projection.
// Closed forms: l_2 (y = f / |f|_2^2), l_inf with a dominated coordinate
// (y = e_j / f_j), l_1 with a 2-sparse functional (exact line search over
// the coordinate plane). Otherwise coordinate descent over {f(y) = 1},
// budget-bounded; when nothing certifies, the result carries the best
// sampled estimate (a lower bound on the attainable norm for each tried y).
ProjectionSearchResult find_norm_one_projection(const Space& space, const Vec& f,
                                                const ProjectionSearchBudget& budget = {},
                                                std::uint64_t seed = 17);

// Piecewise-affine retraction onto ker(f) built from a selection mapping
// into {f <= 0}: interpolates x with the selection output to land exactly
// on the kernel; mirrored construction for f(x) < 0.
Vec kernel_retraction(const Functional& f,
                      const std::function<Vec(const Vec&)>& selection, const Vec& x);

// Positively homogeneous extension of a unit-sphere selection: 0 at 0,
// |x| P0(x / |x|) elsewhere.
Vec homogeneous_extension(const Space& space,
                          const std::function<Vec(const Vec&)>& sphere_selection,
                          const Vec& x);

}  // namespace coapprox
