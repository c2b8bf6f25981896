#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "coapprox/space.hpp"

namespace coapprox {
namespace kernels {

// Every kernel exists twice: a plain serial loop (the reference) and an
// OpenMP version. Both produce bit-identical results for any thread count:
// samples are generated from per-index streams and the reductions are
// min/max merges with index tie-breaking.
enum class Exec { Serial, Parallel };

// Thread budget honoring the COAPPROX_THREADS environment variable.
int thread_cap();

// Points stored row-major for allocation-free inner loops.
struct FlatPoints {
  std::size_t count = 0;
  std::size_t dim = 0;
  std::vector<double> data;

  const double* row(std::size_t i) const { return data.data() + i * dim; }
};

FlatPoints flatten(const std::vector<Vec>& points);

struct PairSweepResult {
  double max_ratio = 0.0;
  std::size_t worst_index = 0;  // pair index achieving the max
  std::size_t pairs_used = 0;   // pairs with denominator above threshold
};

// max over sampled pairs (x, z) of |map(x) - map(z)| / |x - z|, pairs drawn
// uniformly from the centered box of the given half width.
PairSweepResult max_pair_ratio(const std::function<Vec(const Vec&)>& map,
                               const Space& space, std::size_t pairs,
                               std::uint64_t seed, double half_width, Exec exec);

// Sampled operator norm of w -> w - f(w) y. Low-discrepancy sphere samples
// plus every sign vector (exact extreme points for l_inf) plus +-e_i (exact
// for l_1).
double op_norm_estimate(const Space& space, const Vec& f, const Vec& y,
                        std::size_t samples, std::uint64_t seed, Exec exec);

struct ScanResult {
  double margin = 0.0;     // min over candidates of max over refs
  std::size_t index = 0;   // candidate achieving it (smallest on ties)
};

// Worst-case margin scan: for candidate d and reference c the term is
// |d - c| - |x - c|; max over c is taken per candidate, then the minimum
// over candidates. Branch-and-bound against the running minimum keeps the
// scan exact while skipping hopeless candidates early.
ScanResult min_max_margin(const Space& space, const FlatPoints& candidates,
                          const FlatPoints& refs, const Vec& x,
                          std::ptrdiff_t warm_start, Exec exec);

// max over refs c of |d - c| - |x - c|, stopping early once the running
// value exceeds stop_above (pass +inf for the exact maximum).
double max_margin(const Space& space, const FlatPoints& refs, const Vec& d,
                  const Vec& x, double stop_above, Exec exec);

}  // namespace kernels
}  // namespace coapprox
