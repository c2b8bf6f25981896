#include "coapprox/gauge.hpp"

#include <cmath>
#include <stdexcept>

#include "coapprox/errors.hpp"
#include "coapprox/rng.hpp"
#include "coapprox/simplex.hpp"

namespace coapprox {

double gauge(const Body& body, const Vec& x, double tol) {
  if (x.size() != body.dim()) throw DimensionMismatch("gauge: dimension mismatch");
  if (!body.has_interior())
    throw DegenerateBody("gauge: body has no interior certificate at 0");
  const double nx = l2_norm(x);
  if (nx == 0.0) return 0.0;
  double lo = nx / body.outer_radius() * (1.0 - 1e-12);
  double hi = nx / body.inner_radius() * (1.0 + 1e-12);
  // x/hi lands in the certified inner ball, x/lo outside the outer one.
  for (int it = 0; it < 120 && (hi - lo) > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (body.contains(scaled(x, 1.0 / mid)))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

Vec boundary_point(const Body& body, const Vec& direction) {
  if (l2_norm(direction) == 0.0) throw ZeroVector("boundary_point: zero direction");
  const double g = gauge(body, direction);
  return scaled(direction, 1.0 / g);
}

HalfSpace supporting_halfspace(const Space& ambient, const Body& body, const Vec& z) {
  if (z.size() != body.dim() || ambient.dim() != body.dim())
    throw DimensionMismatch("supporting_halfspace: dimension mismatch");
  const double gz = gauge(body, z);
  if (std::abs(gz - 1.0) > 1e-4)
    throw NotOnBoundary("supporting_halfspace: gauge(z) = " + std::to_string(gz));

  const std::size_t n = z.size();
  const double h = 1e-6 * std::max(1.0, l2_norm(z));
  Vec grad(n);
  Vec zp = z;
  for (std::size_t i = 0; i < n; ++i) {
    zp[i] = z[i] + h;
    const double up = gauge(body, zp);
    zp[i] = z[i] - h;
    const double um = gauge(body, zp);
    zp[i] = z[i];
    const double right = (up - gz) / h;
    const double left = (gz - um) / h;
    if (std::abs(right - left) > 1e-4)
      throw NotSmooth("supporting_halfspace: gauge not differentiable at z");
    grad[i] = (up - um) / (2.0 * h);
  }
  const double dn = ambient.dual_norm(grad);
  if (dn < 1e-12) throw NotSmooth("supporting_halfspace: vanishing gauge gradient");
  Functional f{scaled(grad, 1.0 / dn)};
  const double level = f(z);
  return HalfSpace{std::move(f), level, ambient};
}

DirectionSampler lowdisc_sampler(std::size_t dim, std::uint64_t seed) {
  return [dim, seed](std::size_t k) { return lowdisc_direction(dim, k, seed); };
}

DirectionSampler equiangular_sampler(std::size_t count) {
  if (count == 0) throw std::invalid_argument("equiangular_sampler: count must be >= 1");
  return [count](std::size_t k) {
    const double theta =
        6.283185307179586 * static_cast<double>(k) / static_cast<double>(count);
    return Vec{std::cos(theta), std::sin(theta)};
  };
}

DirectionSampler axis_sampler(std::size_t dim) {
  return [dim](std::size_t k) {
    const std::size_t i = (k / 2) % dim;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return unit_vector(dim, i, sign);
  };
}

namespace {

std::vector<Vec> sample_body_points(const Body& body, std::size_t count) {
  if (const auto* v = std::get_if<Body::Vertices>(&body.rep())) return v->points;
  std::vector<Vec> pts;
  pts.reserve(count + 1);
  pts.push_back(zeros(body.dim()));
  for (std::size_t i = 0; i < count; ++i)
    pts.push_back(boundary_point(body, lowdisc_direction(body.dim(), i, 77)));
  return pts;
}

}  // namespace

std::vector<HalfSpace> decompose(const Space& ambient, const Body& body,
                                 std::size_t count, const DirectionSampler& sampler) {
  if (count == 0) throw std::invalid_argument("decompose: count must be >= 1");
  std::vector<HalfSpace> out;
  out.reserve(count);
  const auto members = sample_body_points(body, 64);
  for (std::size_t k = 0; k < count; ++k) {
    Vec dir = sampler(k);
    for (int attempt = 0; attempt <= 5; ++attempt) {
      try {
        const Vec z = boundary_point(body, dir);
        HalfSpace hs = supporting_halfspace(ambient, body, z);
        for (const auto& m : members) {
          if (hs.f(m) > hs.level + 1e-6)
            throw CertificationFailure("decompose: face fails to contain the body");
        }
        out.push_back(std::move(hs));
        break;
      } catch (const NotSmooth&) {
        if (attempt == 5) break;
        Vec nudge = lowdisc_direction(dir.size(), 7 * k + attempt, 4242);
        axpy(1e-3, nudge, dir);
        const double n = l2_norm(dir);
        if (n > 0) dir = scaled(dir, 1.0 / n);
      }
    }
  }
  if (out.empty())
    throw NoSmoothPoints("decompose: every sampled boundary point was non-smooth");
  return out;
}

double support_function(const Body& body, const Vec& direction) {
  if (direction.size() != body.dim())
    throw DimensionMismatch("support_function: dimension mismatch");
  if (const auto* v = std::get_if<Body::Vertices>(&body.rep())) {
    double best = -1e300;
    for (const auto& p : v->points) best = std::max(best, dot(direction, p));
    return best;
  }
  if (const auto* b = std::get_if<Body::NormBall>(&body.rep())) {
    return dot(direction, b->center) + b->radius * b->space.dual_norm(direction);
  }
  if (const auto* hl = std::get_if<Body::HalfSpaceList>(&body.rep())) {
    // max u.x subject to f_k(x) <= d_k, via x = xp - xm, slack per face
    const std::size_t d = body.dim();
    const std::size_t K = hl->faces.size();
    const std::size_t nv = 2 * d + K;
    std::vector<double> A(K * nv, 0.0), b(K), c(nv, 0.0);
    for (std::size_t k = 0; k < K; ++k) {
      for (std::size_t j = 0; j < d; ++j) {
        A[k * nv + j] = hl->faces[k].f.coeffs[j];
        A[k * nv + d + j] = -hl->faces[k].f.coeffs[j];
      }
      A[k * nv + 2 * d + k] = 1.0;
      b[k] = hl->faces[k].level;
    }
    for (std::size_t j = 0; j < d; ++j) {
      c[j] = -direction[j];
      c[d + j] = direction[j];
    }
    const LpResult res = solve_lp(A, K, nv, b, c);
    if (res.status != LpStatus::Optimal)
      throw CertificationFailure("support_function: face list is not bounded");
    return -res.objective;
  }
  // Oracle bodies: sampled radial boundary sweep, a lower estimate.
  double best = -1e300;
  for (std::size_t i = 0; i < 256; ++i) {
    const Vec z = boundary_point(body, lowdisc_direction(body.dim(), i, 99));
    best = std::max(best, dot(direction, z));
  }
  const Vec z = boundary_point(body, direction);
  return std::max(best, dot(direction, z));
}

double hausdorff_estimate(const Space& ambient, const Body& a, const Body& b,
                          std::size_t samples) {
  if (a.dim() != b.dim() || ambient.dim() != a.dim())
    throw DimensionMismatch("hausdorff_estimate: dimension mismatch");
  if (samples == 0) throw std::invalid_argument("hausdorff_estimate: samples must be >= 1");
  const std::size_t d = a.dim();
  double worst = 0.0;
  const auto probe = [&](Vec u) {
    const double dn = ambient.dual_norm(u);
    if (dn < 1e-12) return;
    u = scaled(u, 1.0 / dn);
    worst = std::max(worst, std::abs(support_function(a, u) - support_function(b, u)));
  };
  for (std::size_t i = 0; i < samples; ++i) probe(lowdisc_direction(d, i, 1234));
  for (std::size_t j = 0; j < d; ++j) {
    probe(unit_vector(d, j, 1.0));
    probe(unit_vector(d, j, -1.0));
  }
  return worst;
}

Body intersection_body(std::vector<HalfSpace> faces, double outer_radius) {
  return Body::from_halfspaces(std::move(faces), outer_radius);
}

Body translate(const Body& body, const Vec& shift,
               std::optional<double> new_inner_radius) {
  if (shift.size() != body.dim()) throw DimensionMismatch("translate: dimension mismatch");
  const double off = l2_norm(shift);
  const double r = new_inner_radius.value_or(body.inner_radius() - off);
  const double R = body.outer_radius() + off;
  if (const auto* v = std::get_if<Body::Vertices>(&body.rep())) {
    std::vector<Vec> pts;
    pts.reserve(v->points.size());
    for (const auto& p : v->points) pts.push_back(add(p, shift));
    return Body::uncertified(Body::Vertices{std::move(pts)}, body.dim(), r, R);
  }
  if (const auto* nb = std::get_if<Body::NormBall>(&body.rep())) {
    return Body::uncertified(Body::NormBall{nb->space, add(nb->center, shift), nb->radius},
                             body.dim(), r, R);
  }
  if (const auto* hl = std::get_if<Body::HalfSpaceList>(&body.rep())) {
    std::vector<HalfSpace> faces = hl->faces;
    for (auto& f : faces) f.level += f.f(shift);
    return Body::uncertified(Body::HalfSpaceList{std::move(faces)}, body.dim(), r, R);
  }
  auto member = std::get<Body::Oracle>(body.rep()).member;
  Vec sh = shift;
  return Body::uncertified(
      Body::Oracle{[member, sh](const Vec& x) { return member(sub(x, sh)); }},
      body.dim(), r, R);
}

Body scale(const Body& body, double t) {
  if (t == 0.0) throw DegenerateBody("scale: t = 0 collapses the body to {0}");
  const double at = std::abs(t);
  if (const auto* v = std::get_if<Body::Vertices>(&body.rep())) {
    std::vector<Vec> pts;
    pts.reserve(v->points.size());
    for (const auto& p : v->points) pts.push_back(scaled(p, t));
    return Body::from_vertices(std::move(pts), at * body.inner_radius());
  }
  if (const auto* hl = std::get_if<Body::HalfSpaceList>(&body.rep())) {
    std::vector<HalfSpace> faces = hl->faces;
    for (auto& f : faces) {
      f.level *= t;
      if (t < 0.0) {
        f.f.coeffs = scaled(f.f.coeffs, -1.0);
        f.level = -f.level;
      }
    }
    return Body::from_halfspaces(std::move(faces), at * body.outer_radius());
  }
  if (const auto* nb = std::get_if<Body::NormBall>(&body.rep())) {
    const bool symmetric = nb->space.kind() != NormKind::GaugeBody;
    if (t > 0.0 || symmetric)
      return Body::norm_ball(nb->space, scaled(nb->center, t), at * nb->radius);
  }
  // Remaining cases (oracle bodies, negatively scaled gauge balls) wrap the
  // membership predicate.
  const Body base = body;
  const double inv = 1.0 / t;
  return Body::from_oracle(
      body.dim(), [base, inv](const Vec& x) { return base.contains(scaled(x, inv)); },
      at * body.inner_radius(), at * body.outer_radius());
}

}  // namespace coapprox
