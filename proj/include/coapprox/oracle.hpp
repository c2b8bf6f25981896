#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "coapprox/kernels.hpp"
#include "coapprox/space.hpp"

namespace coapprox {

enum class Provenance { Grid, VertexList, Explicit };

// Finite discretization of a candidate set F, with the resolution and
// truncation radius that produced it (reports carry both so numbers are
// reproducible).
struct SampledSet {
  std::vector<Vec> points;
  kernels::FlatPoints flat;
  Provenance provenance = Provenance::Explicit;
  double resolution = 0.0;
  double truncation_radius = 0.0;

  std::size_t size() const { return points.size(); }
};

SampledSet make_sampled_set(std::vector<Vec> points, Provenance provenance,
                            double resolution, double truncation_radius);

// Grid over span(basis): coefficients range over [-R, R]^k in steps of h,
// keeping points with norm at most R. Intended for bases whose coefficients
// read off coordinates, so the coefficient box covers the truncated set.
SampledSet grid_on_span(const Space& space, const std::vector<Vec>& basis, double h,
                        double R);

// Is d a best coapproximation of x relative to the sampled F:
// |d - c| <= |x - c| + tol for every sample c.
bool is_coapprox(const Space& space, const SampledSet& F, const Vec& d, const Vec& x,
                 double tol);

struct CoapproxReport {
  Vec query;
  std::optional<Vec> best;
  double margin = 0.0;  // min over d of max over c of |d - c| - |x - c|
  std::size_t samples = 0;
  double resolution = 0.0;
  double truncation_radius = 0.0;

  bool passed(double tol) const { return margin <= tol; }
};

// Exhaustive scan for the candidate minimizing the worst-case margin.
CoapproxReport find_coapprox(const Space& space, const SampledSet& F, const Vec& x,
                             std::ptrdiff_t warm_start = -1);

// Among candidates passing the coapproximation test at the tolerance, the
// one closest to the query. On truncated grids the margin minimizer of
// find_coapprox balances against the truncation corners; this variant is
// the well-posed inverse of the contractive selection (unique in strictly
// convex norms). Empty when nothing passes.
std::optional<Vec> find_coapprox_near(const Space& space, const SampledSet& F,
                                      const Vec& x, double tol);

struct OptimalityResult {
  bool optimal = true;  // one-sided at desk scale: no dominator found
  std::optional<Vec> dominator;
};

// Searches for x != z with |x - c| <= |z - c| for every sample c (random
// starts plus coordinate descent on the worst-case margin).
OptimalityResult is_optimal_point(const Space& space, const SampledSet& F, const Vec& z,
                                  std::size_t trial_budget, std::uint64_t seed = 71);

struct CounterexampleResult {
  Vec witness;            // unit vector whose coapproximation set is empty
  double margin_grid;     // exact min-max margin on the grid
  double margin_certified;  // grid margin minus the continuum slack h
  double resolution;
  double truncation_radius;
  std::uint64_t seed;
  std::vector<std::pair<Vec, double>> candidate_margins;  // coarse search trace
};

// Intersection of the two kernels ker(1,0,0,0) and ker(1/2,1/6,1/6,1/6) in
// l_inf^4: finds and certifies a point with no best coapproximation in the
// truncated sampled set. A margin that clears the grid by more than the
// Lipschitz slack h persists on the whole truncation; candidates outside
// the truncation already fail against c = 0.
CounterexampleResult verify_counterexample_linf4(double h = 0.05, double R = 10.0,
                                                 std::uint64_t seed = 1);

// Control for the same pipeline on the single kernel ker(1,0,0,0), which is
// one-complemented: the scan must find a candidate with margin <= 0.
CoapproxReport counterexample_control_ker_e1(const Vec& x, double h = 0.25,
                                             double R = 5.0);

// Retraction onto {(x, y) : |y| <= |x|}, a nonconvex contractive set in
// l_inf^2. sgn(0) is +1; on |y| = |x| all branches agree with the identity.
Vec nonconvex_projection_linf2(const Vec& v);

struct SweepReport {
  double max_ratio = 0.0;
  std::size_t pairs = 0;
  std::size_t pairs_used = 0;
  std::uint64_t seed = 0;
  Vec worst_x, worst_z;
};

// Certification harness: max over sampled pairs of |Mx - Mz| / |x - z|.
SweepReport nonexpansiveness_sweep(const std::function<Vec(const Vec&)>& map,
                                   const Space& space, std::size_t pairs,
                                   std::uint64_t seed, double half_width = 2.0);

}  // namespace coapprox
