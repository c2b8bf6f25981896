// Times each data-parallel kernel against its serial reference and checks
// that both produce identical results. Run with COAPPROX_THREADS=N to pin
// the thread count.

#include <chrono>
#include <cstdio>

#include "coapprox/kernels.hpp"
#include "coapprox/omp_shim.hpp"
#include "coapprox/oracle.hpp"
#include "coapprox/projection.hpp"

using namespace coapprox;
using kernels::Exec;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_of(F&& fn) {
  const auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool match) {
  std::printf("%-28s %10.3f s %10.3f s %8.2fx   %s\n", name, serial, parallel,
              serial / parallel, match ? "results match" : "RESULTS DIFFER");
}

}  // namespace

int main() {
  std::printf("threads: %d (of %d available)\n\n", kernels::thread_cap(),
              omp_get_max_threads());
  std::printf("%-28s %12s %12s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    const Space space = Space::linf(4);
    const HalfSpace hs = make_halfspace(space, {0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6}, 0.25);
    const HalfSpaceProjection q = make_halfspace_projection(hs, {2, 0, 0, 0}, false);
    kernels::PairSweepResult rs, rp;
    const double ts = time_of([&] {
      rs = kernels::max_pair_ratio(q, space, 400000, 7, 2.0, Exec::Serial);
    });
    const double tp = time_of([&] {
      rp = kernels::max_pair_ratio(q, space, 400000, 7, 2.0, Exec::Parallel);
    });
    row("pair ratio sweep (4e5)", ts, tp,
        rs.max_ratio == rp.max_ratio && rs.worst_index == rp.worst_index);
  }

  {
    const Space space = Space::linf(6);
    const Vec f{0.5, 0.1, 0.1, 0.1, 0.1, 0.1};
    const Vec y{2, 0, 0, 0, 0, 0};
    double vs = 0.0, vp = 0.0;
    const double ts = time_of(
        [&] { vs = kernels::op_norm_estimate(space, f, y, 200000, 7, Exec::Serial); });
    const double tp = time_of(
        [&] { vp = kernels::op_norm_estimate(space, f, y, 200000, 7, Exec::Parallel); });
    row("operator norm (2e5)", ts, tp, vs == vp);
  }

  {
    const Space space = Space::linf(4);
    const std::vector<Vec> basis = {{0, 1, -1, 0}, {0, 0, 1, -1}};
    const SampledSet grid = grid_on_span(space, basis, 0.1, 6.0);
    const Vec x{1, 1, 1, 1};
    kernels::ScanResult rs, rp;
    const double ts = time_of([&] {
      rs = kernels::min_max_margin(space, grid.flat, grid.flat, x, -1, Exec::Serial);
    });
    const double tp = time_of([&] {
      rp = kernels::min_max_margin(space, grid.flat, grid.flat, x, -1, Exec::Parallel);
    });
    row("min-max margin scan", ts, tp, rs.margin == rp.margin && rs.index == rp.index);
    std::printf("  (grid: %zu points, margin %.12f at index %zu)\n", grid.size(),
                rp.margin, rp.index);
  }

  return 0;
}
