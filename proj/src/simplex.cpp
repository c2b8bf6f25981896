#include "coapprox/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace coapprox {

namespace {

constexpr double kEps = 1e-11;

// Tableau with rows 0..m-1 = constraints, row m = objective (reduced costs).
struct Tableau {
  std::size_t m, n;
  std::vector<double> t;          // (m + 1) x (n + 1), last column = rhs
  std::vector<std::size_t> basis; // basic variable per row

  double& at(std::size_t r, std::size_t c) { return t[r * (n + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return t[r * (n + 1) + c]; }
  double& rhs(std::size_t r) { return t[r * (n + 1) + n]; }
  double rhs(std::size_t r) const { return t[r * (n + 1) + n]; }
};

void pivot(Tableau& T, std::size_t pr, std::size_t pc) {
  const double piv = T.at(pr, pc);
  const double inv = 1.0 / piv;
  for (std::size_t c = 0; c <= T.n; ++c) T.at(pr, c) *= inv;
  for (std::size_t r = 0; r <= T.m; ++r) {
    if (r == pr) continue;
    const double factor = T.at(r, pc);
    if (factor == 0.0) continue;
    for (std::size_t c = 0; c <= T.n; ++c) T.at(r, c) -= factor * T.at(pr, c);
  }
  T.basis[pr] = pc;
}

// Bland's rule: entering = lowest-index negative reduced cost, leaving =
// min ratio with lowest basis index on ties. Returns false when optimal.
bool simplex_iterate(Tableau& T, std::size_t max_pivots) {
  for (std::size_t iter = 0; iter < max_pivots; ++iter) {
    std::size_t pc = T.n;
    for (std::size_t c = 0; c < T.n; ++c) {
      if (T.at(T.m, c) < -kEps) {
        pc = c;
        break;
      }
    }
    if (pc == T.n) return true;  // optimal

    std::size_t pr = T.m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < T.m; ++r) {
      const double a = T.at(r, pc);
      if (a > kEps) {
        const double ratio = T.rhs(r) / a;
        if (ratio < best - kEps ||
            (ratio < best + kEps && (pr == T.m || T.basis[r] < T.basis[pr]))) {
          best = ratio;
          pr = r;
        }
      }
    }
    if (pr == T.m) return false;  // unbounded
    pivot(T, pr, pc);
  }
  throw std::runtime_error("simplex: pivot limit exceeded");
}

}  // namespace

LpResult solve_lp(const std::vector<double>& A, std::size_t m, std::size_t n,
                  const std::vector<double>& b, const std::vector<double>& c) {
  if (A.size() != m * n || b.size() != m || c.size() != n)
    throw std::invalid_argument("solve_lp: inconsistent sizes");

  // Phase 1: artificial variable per row, rhs made nonnegative.
  Tableau T;
  T.m = m;
  T.n = n + m;
  T.t.assign((m + 1) * (T.n + 1), 0.0);
  T.basis.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    const double sign = (b[r] < 0.0) ? -1.0 : 1.0;
    for (std::size_t cj = 0; cj < n; ++cj) T.at(r, cj) = sign * A[r * n + cj];
    T.at(r, n + r) = 1.0;
    T.rhs(r) = sign * b[r];
    T.basis[r] = n + r;
  }
  // Phase-1 objective: sum of artificials, expressed in nonbasic terms.
  for (std::size_t cj = 0; cj < n; ++cj) {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) s += T.at(r, cj);
    T.at(m, cj) = -s;
  }
  double rhs_sum = 0.0;
  for (std::size_t r = 0; r < m; ++r) rhs_sum += T.rhs(r);
  T.rhs(m) = -rhs_sum;

  const std::size_t max_pivots = 2000 + 40 * (T.n + m);
  if (!simplex_iterate(T, max_pivots))
    throw std::runtime_error("simplex: phase 1 unbounded");

  if (-T.rhs(m) > 1e-9) return {LpStatus::Infeasible, 0.0, {}};

  // Drive any artificial still in the basis out (degenerate row) or drop it.
  for (std::size_t r = 0; r < m; ++r) {
    if (T.basis[r] >= n) {
      std::size_t pc = n;
      for (std::size_t cj = 0; cj < n; ++cj) {
        if (std::abs(T.at(r, cj)) > 1e-9) {
          pc = cj;
          break;
        }
      }
      if (pc < n) pivot(T, r, pc);
      // else: row is all zeros over the original columns; harmless.
    }
  }

  // Phase 2 on the original columns.
  Tableau P;
  P.m = m;
  P.n = n;
  P.t.assign((m + 1) * (n + 1), 0.0);
  P.basis = T.basis;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t cj = 0; cj < n; ++cj) P.at(r, cj) = T.at(r, cj);
    P.rhs(r) = T.rhs(r);
  }
  for (std::size_t cj = 0; cj < n; ++cj) P.at(m, cj) = c[cj];
  P.rhs(m) = 0.0;
  // Express the objective in nonbasic variables.
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t bv = P.basis[r];
    if (bv < n && P.at(m, bv) != 0.0) {
      const double factor = P.at(m, bv);
      for (std::size_t cj = 0; cj <= n; ++cj) P.at(m, cj) -= factor * P.at(r, cj);
    }
  }

  if (!simplex_iterate(P, max_pivots)) return {LpStatus::Unbounded, 0.0, {}};

  LpResult res;
  res.status = LpStatus::Optimal;
  res.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (P.basis[r] < n) res.x[P.basis[r]] = P.rhs(r);
  double obj = 0.0;
  for (std::size_t cj = 0; cj < n; ++cj) obj += c[cj] * res.x[cj];
  res.objective = obj;
  return res;
}

bool lp_feasible(const std::vector<double>& A, std::size_t m, std::size_t n,
                 const std::vector<double>& b) {
  const std::vector<double> c(n, 0.0);
  return solve_lp(A, m, n, b, c).status == LpStatus::Optimal;
}

}  // namespace coapprox
