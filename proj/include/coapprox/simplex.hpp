#pragma once

#include <cstddef>
#include <vector>

namespace coapprox {

// Dense two-phase simplex for the small LPs this project needs (hull
// membership, origin-in-hull tests, polytope support functions). Problems
// have at most a handful of rows; no sparsity, Bland's rule throughout.
//
//   minimize c . x   subject to  A x = b,  x >= 0
//
// A is row-major, m rows by n columns.
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  double objective = 0.0;
  std::vector<double> x;
};

LpResult solve_lp(const std::vector<double>& A, std::size_t m, std::size_t n,
                  const std::vector<double>& b, const std::vector<double>& c);

// Phase-1 only: is {x >= 0 : A x = b} nonempty?
bool lp_feasible(const std::vector<double>& A, std::size_t m, std::size_t n,
                 const std::vector<double>& b);

}  // namespace coapprox
