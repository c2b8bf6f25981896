#include "coapprox/space.hpp"

#include <cmath>
#include <stdexcept>

#include "coapprox/body.hpp"
#include "coapprox/errors.hpp"
#include "coapprox/gauge.hpp"

namespace coapprox {

namespace {

void check_dim(const Space& s, const Vec& x, const char* who) {
  if (x.size() != s.dim())
    throw DimensionMismatch(std::string(who) + ": vector has dimension " +
                            std::to_string(x.size()) + ", space has " +
                            std::to_string(s.dim()));
}

// Scaled power sum; robust for large p where |x_i|^p would overflow.
double lp_norm(const Vec& x, double p) {
  if (p == 1.0) return l1_norm(x);
  if (p == 2.0) return l2_norm(x);
  const double m = linf_norm(x);
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (double v : x) s += std::pow(std::abs(v) / m, p);
  return m * std::pow(s, 1.0 / p);
}

}  // namespace

Space Space::lp(double p, std::size_t dim) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("Space::lp: p must be finite and >= 1");
  if (dim == 0) throw std::invalid_argument("Space::lp: dimension must be >= 1");
  return Space(NormKind::Lp, p, dim, nullptr);
}

Space Space::linf(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("Space::linf: dimension must be >= 1");
  return Space(NormKind::LInf, 0.0, dim, nullptr);
}

Space Space::gauge_ball(std::shared_ptr<const Body> body) {
  if (!body) throw std::invalid_argument("Space::gauge_ball: null body");
  const std::size_t d = body->dim();
  return Space(NormKind::GaugeBody, 0.0, d, std::move(body));
}

const Body& Space::body() const {
  if (!body_) throw std::logic_error("Space::body: not a gauge space");
  return *body_;
}

double Space::norm(const Vec& x) const {
  check_dim(*this, x, "Space::norm");
  switch (kind_) {
    case NormKind::Lp:
      return lp_norm(x, p_);
    case NormKind::LInf:
      return linf_norm(x);
    case NormKind::GaugeBody:
      // full-depth bisection; finite differences of this norm need the
      // evaluation noise at machine level
      return gauge(*body_, x, 0.0);
  }
  return 0.0;
}

double Space::dual_norm(const Vec& coeffs) const {
  check_dim(*this, coeffs, "Space::dual_norm");
  switch (kind_) {
    case NormKind::Lp: {
      if (p_ == 1.0) return linf_norm(coeffs);
      const double q = p_ / (p_ - 1.0);
      return lp_norm(coeffs, q);
    }
    case NormKind::LInf:
      return l1_norm(coeffs);
    case NormKind::GaugeBody:
      // sup of the functional over the body (its unit ball)
      return support_function(*body_, coeffs);
  }
  return 0.0;
}

double Functional::operator()(const Vec& x) const {
  if (x.size() != coeffs.size())
    throw DimensionMismatch("Functional: argument dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * x[i];
  return s;
}

Functional supporting_functional(const Space& space, const Vec& x) {
  check_dim(space, x, "supporting_functional");
  const double nx = space.norm(x);
  if (nx == 0.0) throw ZeroVector("supporting_functional: x = 0");

  if (space.kind() == NormKind::Lp && space.p() > 1.0) {
    const double p = space.p();
    Vec f(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double a = std::abs(x[i]) / nx;
      f[i] = (x[i] >= 0.0 ? 1.0 : -1.0) * std::pow(a, p - 1.0);
    }
    return Functional{std::move(f)};
  }

  // Finite differences. One-sided derivatives decide smoothness first.
  const std::size_t n = x.size();
  const double h = 1e-6 * std::max(1.0, nx);
  Vec g(n);
  Vec xp = x;
  for (std::size_t i = 0; i < n; ++i) {
    xp[i] = x[i] + h;
    const double up = space.norm(xp);
    xp[i] = x[i] - h;
    const double um = space.norm(xp);
    xp[i] = x[i];
    const double right = (up - nx) / h;
    const double left = (nx - um) / h;
    if (std::abs(right - left) > 1e-4)
      throw NotSmooth("supporting_functional: norm not differentiable at x");
    g[i] = (up - um) / (2.0 * h);
  }
  const double gd = space.dual_norm(g);
  if (gd == 0.0) throw NotSmooth("supporting_functional: vanishing gradient");
  return Functional{scaled(g, 1.0 / gd)};
}

ApproxNorm approximating_norm(const Space& base, unsigned level) {
  if (level == 0) throw std::invalid_argument("approximating_norm: level must be >= 1");
  const double n = static_cast<double>(base.dim());
  if (base.kind() == NormKind::Lp && base.p() == 1.0) {
    const double p = 1.0 + 1.0 / static_cast<double>(level);
    const double s = std::pow(n, 1.0 - 1.0 / p) - 1.0;
    return ApproxNorm{Space::lp(p, base.dim()), s};
  }
  if (base.kind() == NormKind::LInf) {
    const double p = static_cast<double>(level) + 1.0;
    const double s = 1.0 - std::pow(n, -1.0 / p);
    return ApproxNorm{Space::lp(p, base.dim()), s};
  }
  throw std::invalid_argument("approximating_norm: base space must be l_1 or l_inf");
}

}  // namespace coapprox
