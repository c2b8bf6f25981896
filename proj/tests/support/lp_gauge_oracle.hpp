#pragma once

// Test-side gauge oracle for vertex polytopes, independent of the library's
// bisection-plus-feasibility path. Uses the standard-form reformulation
//
//   gauge(x) = min { sum mu_i : sum mu_i v_i = x, mu >= 0 }
//
// and enumerates basic solutions directly: every optimal vertex has support
// on linearly independent columns, so scanning all column subsets of size at
// most n and solving the induced least-squares systems is exact.

#include <cmath>
#include <limits>
#include <vector>

#include "coapprox/vec.hpp"

namespace coapprox_test {

inline bool solve_gaussian(std::vector<double> a, std::vector<double> b,
                           std::size_t k, std::vector<double>* out) {
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::abs(a[r * k + col]) > std::abs(a[piv * k + col])) piv = r;
    if (std::abs(a[piv * k + col]) < 1e-12) return false;
    if (piv != col) {
      for (std::size_t c = 0; c < k; ++c) std::swap(a[col * k + c], a[piv * k + c]);
      std::swap(b[col], b[piv]);
    }
    for (std::size_t r = col + 1; r < k; ++r) {
      const double factor = a[r * k + col] / a[col * k + col];
      for (std::size_t c = col; c < k; ++c) a[r * k + c] -= factor * a[col * k + c];
      b[r] -= factor * b[col];
    }
  }
  out->assign(k, 0.0);
  for (std::size_t r = k; r-- > 0;) {
    double s = b[r];
    for (std::size_t c = r + 1; c < k; ++c) s -= a[r * k + c] * (*out)[c];
    (*out)[r] = s / a[r * k + r];
  }
  return true;
}

inline double lp_gauge_oracle(const std::vector<coapprox::Vec>& vertices,
                              const coapprox::Vec& x) {
  const std::size_t n = x.size();
  const std::size_t m = vertices.size();
  double nx = 0.0;
  for (double v : x) nx = std::max(nx, std::abs(v));
  if (nx == 0.0) return 0.0;

  double best = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> subset;
  std::vector<double> normal, rhs, mu;

  const auto try_subset = [&]() {
    const std::size_t k = subset.size();
    // normal equations of V_S mu = x
    normal.assign(k * k, 0.0);
    rhs.assign(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r)
          s += vertices[subset[i]][r] * vertices[subset[j]][r];
        normal[i * k + j] = s;
      }
      double s = 0.0;
      for (std::size_t r = 0; r < n; ++r) s += vertices[subset[i]][r] * x[r];
      rhs[i] = s;
    }
    if (!solve_gaussian(normal, rhs, k, &mu)) return;
    double obj = 0.0;
    for (double v : mu) {
      if (v < -1e-9) return;
      obj += v;
    }
    for (std::size_t r = 0; r < n; ++r) {
      double s = 0.0;
      for (std::size_t i = 0; i < k; ++i) s += mu[i] * vertices[subset[i]][r];
      if (std::abs(s - x[r]) > 1e-8 * (1.0 + nx)) return;
    }
    best = std::min(best, obj);
  };

  const auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (!subset.empty()) try_subset();
    if (subset.size() == n) return;
    for (std::size_t i = start; i < m; ++i) {
      subset.push_back(i);
      self(self, i + 1);
      subset.pop_back();
    }
  };
  recurse(recurse, 0);
  return best;
}

}  // namespace coapprox_test
