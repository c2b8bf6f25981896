#include "coapprox/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "coapprox/errors.hpp"
#include "coapprox/kernels.hpp"
#include "coapprox/rng.hpp"

namespace coapprox {

Vec KernelProjection::operator()(const Vec& w) const {
  const double fw = f(w);
  Vec r = w;
  axpy(-fw, y, r);
  return r;
}

KernelProjection make_kernel_projection(Functional f, Vec y) {
  if (f.coeffs.size() != y.size())
    throw DimensionMismatch("make_kernel_projection: dimension mismatch");
  if (std::abs(f(y) - 1.0) > 1e-10)
    throw std::invalid_argument("make_kernel_projection: f(y) must be 1");
  return KernelProjection{std::move(f), std::move(y)};
}

Vec HalfSpaceProjection::operator()(const Vec& x) const {
  const double fx = halfspace.f(x);
  if (fx <= halfspace.level) return x;
  Vec r = x;
  axpy(-(fx - halfspace.level), y, r);
  return r;
}

HalfSpaceProjection make_halfspace_projection(const HalfSpace& hs, Vec y, bool certify,
                                              std::size_t certify_samples,
                                              std::uint64_t seed) {
  if (y.size() != hs.f.dim())
    throw DimensionMismatch("make_halfspace_projection: dimension mismatch");
  if (std::abs(hs.f(y) - 1.0) > 1e-10)
    throw std::invalid_argument("make_halfspace_projection: f(y) must be 1");
  HalfSpaceProjection q{hs, std::move(y), {}, false, 0.0};
  q.anchor = scaled(q.y, hs.level);  // f(anchor) = level since f(y) = 1
  if (certify) {
    q.certificate = kernels::op_norm_estimate(hs.space, hs.f.coeffs, q.y,
                                              certify_samples, seed,
                                              kernels::Exec::Parallel);
    q.certified = q.certificate <= 1.0 + 1e-6;
  }
  return q;
}

HalfSpaceProjection certify_halfspace_projection(const Space& space, Vec coeffs,
                                                 double level, std::uint64_t seed) {
  const ProjectionSearchResult found =
      find_norm_one_projection(space, coeffs, {}, seed);
  if (!found.found())
    throw CertificationFailure(
        "certify_halfspace_projection: no norm-one projection found (estimate " +
        std::to_string(found.norm_estimate) + ")");
  HalfSpace hs = make_halfspace(space, std::move(coeffs), level);
  // the search ran against the unnormalized coefficients; rescale y so the
  // normalized functional still maps it to one
  Vec y = found.projection->y;
  y = scaled(y, 1.0 / hs.f(y));
  HalfSpaceProjection q = make_halfspace_projection(hs, std::move(y), true, 20000, seed);
  if (!q.certified)
    throw CertificationFailure("certify_halfspace_projection: sampled norm " +
                               std::to_string(q.certificate) + " exceeds 1 + 1e-6");
  return q;
}

namespace {

double nonzero_threshold(const Vec& f) {
  double m = linf_norm(f);
  if (m == 0.0) throw ZeroFunctional("one-complementedness test: zero functional");
  return 1e-12 * m;
}

}  // namespace

bool one_complemented_hyperplane_l1(const Vec& f) {
  const double tol = nonzero_threshold(f);
  std::size_t nonzero = 0;
  for (double v : f)
    if (std::abs(v) > tol) ++nonzero;
  return nonzero <= 2;
}

std::optional<std::size_t> dominated_coordinate(const Vec& f) {
  const double total = l1_norm(f);
  if (total == 0.0) throw ZeroFunctional("dominated_coordinate: zero functional");
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double rest = total - std::abs(f[j]);
    if (std::abs(f[j]) >= rest - 1e-12 * total) return j;
  }
  return std::nullopt;
}

bool one_complemented_hyperplane_linf(const Vec& f) {
  return dominated_coordinate(f).has_value();
}

namespace {

// Exact l_1 operator norm of w -> w - f(w) y for 2-sparse f supported on
// {a, b}: the extreme points +-e_i reduce it to the two block columns.
double l1_block_norm(double fa, double fb, double ya, double yb) {
  const double col_a = std::abs(1.0 - fa * ya) + std::abs(fa * yb);
  const double col_b = std::abs(fb * ya) + std::abs(1.0 - fb * yb);
  return std::max({1.0, col_a, col_b});
}

struct SparseSupport {
  std::size_t a = 0, b = 0;
  std::size_t count = 0;
};

SparseSupport sparse_support(const Vec& f, double tol) {
  SparseSupport s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::abs(f[i]) > tol) {
      if (s.count == 0)
        s.a = i;
      else if (s.count == 1)
        s.b = i;
      ++s.count;
    }
  }
  return s;
}

// Ternary search over the convex piecewise-linear objective on the line
// f_a y_a + f_b y_b = 1, parametrized by s = y_b.
Vec l1_two_sparse_y(const Vec& f, const SparseSupport& sup) {
  double fa = f[sup.a];
  double fb = f[sup.b];
  std::size_t ia = sup.a, ib = sup.b;
  if (std::abs(fa) < std::abs(fb)) {
    std::swap(fa, fb);
    std::swap(ia, ib);
  }
  const auto objective = [&](double s) {
    const double ya = (1.0 - fb * s) / fa;
    return l1_block_norm(fa, fb, ya, s);
  };
  double lo = -8.0 / std::abs(fa);
  double hi = 8.0 / std::abs(fa);
  for (int it = 0; it < 240; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (objective(m1) <= objective(m2))
      hi = m2;
    else
      lo = m1;
  }
  const double s = 0.5 * (lo + hi);
  Vec y = zeros(f.size());
  y[ib] = s;
  y[ia] = (1.0 - fb * s) / fa;
  return y;
}

// Operator norm of the 2x2 block v -> v - (f . v) y in l_p, by a dense
// angular scan with golden-section refinement. The block is 2-dimensional
// whatever the ambient dimension.
double lp_block_norm(double p, double fa, double fb, double ya, double yb) {
  const auto ratio = [&](double theta) {
    const double u0 = std::cos(theta);
    const double u1 = std::sin(theta);
    const double fu = fa * u0 + fb * u1;
    const double v0 = u0 - fu * ya;
    const double v1 = u1 - fu * yb;
    const double nu = std::pow(std::pow(std::abs(u0), p) + std::pow(std::abs(u1), p), 1.0 / p);
    const double nv = std::pow(std::pow(std::abs(v0), p) + std::pow(std::abs(v1), p), 1.0 / p);
    return nv / nu;
  };
  const int K = 720;
  double best = 0.0;
  double best_theta = 0.0;
  for (int j = 0; j < K; ++j) {
    const double theta = 3.14159265358979323846 * j / K;
    const double r = ratio(theta);
    if (r > best) {
      best = r;
      best_theta = theta;
    }
  }
  double lo = best_theta - 3.2 / K;
  double hi = best_theta + 3.2 / K;
  for (int it = 0; it < 80; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (ratio(m1) >= ratio(m2))
      hi = m2;
    else
      lo = m1;
  }
  return std::max({1.0, best, ratio(0.5 * (lo + hi))});
}

// For 2-sparse f in l_p the norm-one direction (when it exists) is supported
// on the same block: convex 1-d minimization of the block norm over the
// slice f_a y_a + f_b y_b = 1.
Vec lp_two_sparse_y(double p, const Vec& f, const SparseSupport& sup) {
  double fa = f[sup.a];
  double fb = f[sup.b];
  std::size_t ia = sup.a, ib = sup.b;
  if (std::abs(fa) < std::abs(fb)) {
    std::swap(fa, fb);
    std::swap(ia, ib);
  }
  const auto objective = [&](double s) {
    return lp_block_norm(p, fa, fb, (1.0 - fb * s) / fa, s);
  };
  double lo = -8.0 / std::abs(fa);
  double hi = 8.0 / std::abs(fa);
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (objective(m1) <= objective(m2))
      hi = m2;
    else
      lo = m1;
  }
  const double s = 0.5 * (lo + hi);
  Vec y = zeros(f.size());
  y[ib] = s;
  y[ia] = (1.0 - fb * s) / fa;
  return y;
}

// Basis of ker(f): b_i = e_i - (f_i / f_m) e_m for i != m, m = argmax |f_m|.
std::vector<Vec> kernel_basis(const Vec& f) {
  std::size_t m = 0;
  for (std::size_t i = 1; i < f.size(); ++i)
    if (std::abs(f[i]) > std::abs(f[m])) m = i;
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i == m) continue;
    Vec b = unit_vector(f.size(), i);
    b[m] = -f[i] / f[m];
    basis.push_back(std::move(b));
  }
  return basis;
}

}  // namespace

ProjectionSearchResult find_norm_one_projection(const Space& space, const Vec& f,
                                                const ProjectionSearchBudget& budget,
                                                std::uint64_t seed) {
  if (f.size() != space.dim())
    throw DimensionMismatch("find_norm_one_projection: dimension mismatch");
  const double tol = nonzero_threshold(f);

  const auto certify = [&](Vec y) {
    ProjectionSearchResult res;
    res.norm_estimate = kernels::op_norm_estimate(
        space, f, y, budget.certify_samples, seed, kernels::Exec::Parallel);
    res.best_y = y;
    if (res.norm_estimate <= 1.0 + 1e-6)
      res.projection = make_kernel_projection(Functional{f}, std::move(y));
    return res;
  };

  // Closed forms first.
  if (space.kind() == NormKind::Lp && space.p() == 2.0) {
    const double n2 = dot(f, f);
    return certify(scaled(f, 1.0 / n2));
  }
  if (space.kind() == NormKind::LInf) {
    if (const auto j = dominated_coordinate(f))
      return certify(unit_vector(f.size(), *j, 1.0 / f[*j]));
  }
  if (space.kind() == NormKind::Lp) {
    const SparseSupport sup = sparse_support(f, tol);
    // coordinate hyperplanes are norm-one complemented in every l_p
    if (sup.count == 1) return certify(unit_vector(f.size(), sup.a, 1.0 / f[sup.a]));
    if (sup.count == 2) {
      if (space.p() == 1.0) return certify(l1_two_sparse_y(f, sup));
      return certify(lp_two_sparse_y(space.p(), f, sup));
    }
  }

  // Coordinate descent over the affine slice {f(y) = 1}.
  const Vec y0 = scaled(f, 1.0 / dot(f, f));
  const std::vector<Vec> basis = kernel_basis(f);
  std::size_t evals = 0;
  const auto estimate = [&](const Vec& y) {
    ++evals;
    return kernels::op_norm_estimate(space, f, y, budget.search_samples,
                                     seed + 1, kernels::Exec::Parallel);
  };

  Vec best_y = y0;
  double best_val = estimate(best_y);
  Rng rng(stream_seed(seed, 0xC0DE));
  for (std::size_t restart = 0; restart < budget.restarts; ++restart) {
    if (evals >= budget.max_evals) break;
    Vec y = y0;
    if (restart > 0) {
      for (const auto& b : basis) axpy(rng.uniform(-1.0, 1.0), b, y);
    }
    double val = estimate(y);
    for (int sweep = 0; sweep < 4 && evals < budget.max_evals; ++sweep) {
      bool improved = false;
      for (const auto& b : basis) {
        if (evals >= budget.max_evals) break;
        // golden-section of the sampled norm along y + t b
        double lo = -1.5, hi = 1.5;
        const double phi = 0.6180339887498949;
        double t1 = hi - phi * (hi - lo), t2 = lo + phi * (hi - lo);
        Vec yt = y;
        axpy(t1, b, yt);
        double v1 = estimate(yt);
        yt = y;
        axpy(t2, b, yt);
        double v2 = estimate(yt);
        for (int it = 0; it < 24 && evals < budget.max_evals; ++it) {
          if (v1 <= v2) {
            hi = t2;
            t2 = t1;
            v2 = v1;
            t1 = hi - phi * (hi - lo);
            yt = y;
            axpy(t1, b, yt);
            v1 = estimate(yt);
          } else {
            lo = t1;
            t1 = t2;
            v1 = v2;
            t2 = lo + phi * (hi - lo);
            yt = y;
            axpy(t2, b, yt);
            v2 = estimate(yt);
          }
        }
        const double t = 0.5 * (lo + hi);
        Vec ynew = y;
        axpy(t, b, ynew);
        const double vnew = estimate(ynew);
        if (vnew < val - 1e-12) {
          val = vnew;
          y = std::move(ynew);
          improved = true;
        }
      }
      if (!improved) break;
    }
    if (val < best_val) {
      best_val = val;
      best_y = y;
    }
    if (best_val <= 1.0 + 1e-7) break;
  }
  return certify(std::move(best_y));
}

Vec kernel_retraction(const Functional& f,
                      const std::function<Vec(const Vec&)>& selection, const Vec& x) {
  const double scale = std::max(1.0, linf_norm(x));
  const double tiny = 1e-13 * scale;
  const double fx = f(x);
  if (std::abs(fx) <= tiny) return x;

  if (fx > 0.0) {
    const Vec px = selection(x);
    const double fpx = f(px);
    if (fpx > tiny)
      throw SelectionInvalid("kernel_retraction: selection left the half-space");
    if (fpx >= -tiny) return px;
    const double alpha = -fpx / (fx - fpx);
    Vec r = scaled(x, alpha);
    axpy(1.0 - alpha, px, r);
    return r;
  }

  // f(x) < 0: mirrored construction through -selection(-x).
  const Vec p1 = scaled(selection(scaled(x, -1.0)), -1.0);
  const double fp1 = f(p1);
  if (fp1 < -tiny)
    throw SelectionInvalid("kernel_retraction: mirrored selection left its half-space");
  if (fp1 <= tiny) return p1;
  const double alpha = fp1 / (fp1 - fx);
  Vec r = scaled(x, alpha);
  axpy(1.0 - alpha, p1, r);
  return r;
}

Vec homogeneous_extension(const Space& space,
                          const std::function<Vec(const Vec&)>& sphere_selection,
                          const Vec& x) {
  const double nx = space.norm(x);
  if (nx == 0.0) return zeros(x.size());
  return scaled(sphere_selection(scaled(x, 1.0 / nx)), nx);
}

}  // namespace coapprox
