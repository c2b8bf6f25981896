#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "coapprox/body.hpp"

namespace coapprox {

// Gauge of the body at x: inf { t > 0 : x/t in body }, by bisection over the
// membership oracle between the certified radius brackets. gauge(0) = 0.
double gauge(const Body& body, const Vec& x, double tol = 1e-12);

// Radial boundary point in the given direction: direction / gauge(direction).
Vec boundary_point(const Body& body, const Vec& direction);

// Supporting half-space at a boundary point z (gauge(z) ~ 1): the numerical
// gauge gradient, normalized to unit dual norm in the ambient space, with
// level f(z). Throws NotSmooth at edges and vertices, NotOnBoundary when z
// is off the boundary.
HalfSpace supporting_halfspace(const Space& ambient, const Body& body, const Vec& z);

using DirectionSampler = std::function<Vec(std::size_t)>;

DirectionSampler lowdisc_sampler(std::size_t dim, std::uint64_t seed = 1);
DirectionSampler equiangular_sampler(std::size_t count);  // dimension 2
DirectionSampler axis_sampler(std::size_t dim);           // +e_1, -e_1, +e_2, ...

// Up to `count` supporting half-spaces at smooth sampled boundary points.
// Directions that hit non-smooth points are nudged and retried a few times.
// Every returned half-space is checked to contain sampled body points.
std::vector<HalfSpace> decompose(const Space& ambient, const Body& body,
                                 std::size_t count, const DirectionSampler& sampler);

// sup { direction . x : x in body }. Exact for vertex hulls, norm balls and
// half-space lists (small LP); sampled lower bound for oracle bodies.
double support_function(const Body& body, const Vec& direction);

// Sampled directional estimate of the Hausdorff distance in the ambient
// norm: max over sampled directions u, normalized to unit dual norm, of the
// support gap |h_A(u) - h_B(u)|. Error decays like O(1/samples) for convex
// bodies.
double hausdorff_estimate(const Space& ambient, const Body& a, const Body& b,
                          std::size_t samples);

// Wraps half-spaces as a body so decompositions can be measured against the
// original. The caller certifies boundedness through outer_radius.
Body intersection_body(std::vector<HalfSpace> faces, double outer_radius);

// Affine images. Translation recomputes the interior certificate
// conservatively unless a fresh one is supplied; a shift that moves 0 out
// of the interior yields an uncertified body (see Body::has_interior).
// Scaling by t = 0 is the degenerate body {0} and is refused.
Body translate(const Body& body, const Vec& shift,
               std::optional<double> new_inner_radius = std::nullopt);
Body scale(const Body& body, double t);

}  // namespace coapprox
