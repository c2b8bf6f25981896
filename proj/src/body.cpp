#include "coapprox/body.hpp"

#include <cmath>
#include <stdexcept>

#include "coapprox/errors.hpp"
#include "coapprox/simplex.hpp"

namespace coapprox {

HalfSpace make_halfspace(const Space& space, Vec coeffs, double level) {
  if (coeffs.size() != space.dim())
    throw DimensionMismatch("make_halfspace: functional dimension mismatch");
  if (!all_finite(coeffs) || !std::isfinite(level))
    throw std::invalid_argument("make_halfspace: non-finite input");
  const double dn = space.dual_norm(coeffs);
  if (dn < 1e-14) throw ZeroFunctional("make_halfspace: zero functional");
  return HalfSpace{Functional{scaled(coeffs, 1.0 / dn)}, level / dn, space};
}

bool in_convex_hull(const std::vector<Vec>& points, const Vec& x) {
  if (points.empty()) return false;
  const std::size_t n = x.size();
  const std::size_t m = points.size();
  // lambda >= 0, V lambda = x, sum lambda = 1
  std::vector<double> A((n + 1) * m);
  std::vector<double> b(n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < m; ++j) A[r * m + j] = points[j][r];
    b[r] = x[r];
  }
  for (std::size_t j = 0; j < m; ++j) A[n * m + j] = 1.0;
  b[n] = 1.0;
  return lp_feasible(A, n + 1, m, b);
}

namespace {

// Euclidean radius of the largest ball inside / smallest ball around the
// unit ball of an l_p space.
void lp_unit_ball_radii(const Space& s, double* inner, double* outer) {
  const double n = static_cast<double>(s.dim());
  if (s.kind() == NormKind::LInf) {
    *inner = 1.0;
    *outer = std::sqrt(n);
    return;
  }
  const double p = s.p();
  if (p <= 2.0) {
    *inner = std::pow(n, 0.5 - 1.0 / p);
    *outer = 1.0;
  } else {
    *inner = 1.0;
    *outer = std::pow(n, 0.5 - 1.0 / p);
  }
}

}  // namespace

Body Body::from_vertices(std::vector<Vec> points, double inner_radius) {
  if (points.empty()) throw std::invalid_argument("Body::from_vertices: no points");
  const std::size_t d = points.front().size();
  double R = 0.0;
  for (const auto& p : points) {
    if (p.size() != d) throw DimensionMismatch("Body::from_vertices: ragged points");
    if (!all_finite(p)) throw std::invalid_argument("Body::from_vertices: non-finite point");
    R = std::max(R, l2_norm(p));
  }
  if (!(inner_radius > 0.0))
    throw std::invalid_argument("Body::from_vertices: need a positive interior certificate");
  return Body(Vertices{std::move(points)}, d, inner_radius, R);
}

Body Body::norm_ball(const Space& space, Vec center, double radius) {
  if (center.size() != space.dim())
    throw DimensionMismatch("Body::norm_ball: center dimension mismatch");
  if (!(radius > 0.0)) throw std::invalid_argument("Body::norm_ball: radius must be > 0");
  double ri = 0.0, ro = 0.0;
  if (space.kind() == NormKind::GaugeBody) {
    ri = space.body().inner_radius();
    ro = space.body().outer_radius();
  } else {
    lp_unit_ball_radii(space, &ri, &ro);
  }
  const double off = l2_norm(center);
  const double r = radius * ri - off;
  const double R = radius * ro + off;
  if (!(r > 0.0))
    throw DegenerateBody("Body::norm_ball: 0 is not interior to the shifted ball");
  return Body(NormBall{space, std::move(center), radius}, space.dim(), r, R);
}

Body Body::from_halfspaces(std::vector<HalfSpace> faces, double outer_radius) {
  if (faces.empty()) throw std::invalid_argument("Body::from_halfspaces: no faces");
  const std::size_t d = faces.front().f.dim();
  double r = outer_radius;
  for (const auto& h : faces) {
    if (h.f.dim() != d) throw DimensionMismatch("Body::from_halfspaces: ragged faces");
    const double n2 = l2_norm(h.f.coeffs);
    if (n2 < 1e-14) throw ZeroFunctional("Body::from_halfspaces: zero face functional");
    r = std::min(r, h.level / n2);  // Euclidean distance from 0 to the face plane
  }
  if (!(r > 0.0))
    throw DegenerateBody("Body::from_halfspaces: 0 is not interior (some level <= 0)");
  if (!(outer_radius > 0.0))
    throw std::invalid_argument("Body::from_halfspaces: need a positive outer radius");
  return Body(HalfSpaceList{std::move(faces)}, d, r, outer_radius);
}

Body Body::from_oracle(std::size_t dim, std::function<bool(const Vec&)> member,
                       double inner_radius, double outer_radius) {
  if (!member) throw std::invalid_argument("Body::from_oracle: null predicate");
  if (!(inner_radius > 0.0) || !(outer_radius >= inner_radius))
    throw std::invalid_argument("Body::from_oracle: bad radius certificates");
  return Body(Oracle{std::move(member)}, dim, inner_radius, outer_radius);
}

Body Body::uncertified(Rep rep, std::size_t dim, double inner_radius,
                       double outer_radius) {
  if (!(outer_radius > 0.0))
    throw std::invalid_argument("Body::uncertified: need a positive outer radius");
  return Body(std::move(rep), dim, std::max(0.0, inner_radius), outer_radius);
}

bool Body::contains(const Vec& x) const {
  if (x.size() != dim_) throw DimensionMismatch("Body::contains: dimension mismatch");
  const double slack = 1e-9 * outer_radius_;
  if (const auto* v = std::get_if<Vertices>(&rep_)) {
    if (l2_norm(x) > outer_radius_ + slack) return false;
    return in_convex_hull(v->points, x);
  }
  if (const auto* b = std::get_if<NormBall>(&rep_)) {
    return b->space.norm(sub(x, b->center)) <= b->radius + slack;
  }
  if (const auto* h = std::get_if<HalfSpaceList>(&rep_)) {
    for (const auto& face : h->faces)
      if (!face.contains(x, slack)) return false;
    return l2_norm(x) <= outer_radius_ + slack;
  }
  return std::get<Oracle>(rep_).member(x);
}

}  // namespace coapprox
