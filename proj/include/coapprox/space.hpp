#pragma once

#include <cstddef>
#include <memory>

#include "coapprox/vec.hpp"

namespace coapprox {

class Body;

enum class NormKind { Lp, LInf, GaugeBody };

// Norm carrier for R^n: an l_p norm with finite p >= 1, the max norm as a
// distinguished kind (never a float), or the gauge of a convex body with 0
// in its interior.
class Space {
 public:
  static Space lp(double p, std::size_t dim);
  static Space l1(std::size_t dim) { return lp(1.0, dim); }
  static Space l2(std::size_t dim) { return lp(2.0, dim); }
  static Space linf(std::size_t dim);
  static Space gauge_ball(std::shared_ptr<const Body> body);

  NormKind kind() const { return kind_; }
  double p() const { return p_; }  // meaningful for Lp only
  std::size_t dim() const { return dim_; }
  const Body& body() const;
  const std::shared_ptr<const Body>& body_ptr() const { return body_; }

  double norm(const Vec& x) const;

  // Norm of the functional x -> coeffs . x. Exact Holder conjugate for
  // l_p / l_inf; exact for vertex bodies; sampled lower bound otherwise.
  double dual_norm(const Vec& coeffs) const;

  bool strictly_convex() const { return kind_ == NormKind::Lp && p_ > 1.0; }

 private:
  Space(NormKind kind, double p, std::size_t dim, std::shared_ptr<const Body> body)
      : kind_(kind), p_(p), dim_(dim), body_(std::move(body)) {}

  NormKind kind_;
  double p_;
  std::size_t dim_;
  std::shared_ptr<const Body> body_;
};

// Linear functional acting by the dot product.
struct Functional {
  Vec coeffs;

  double operator()(const Vec& x) const;
  std::size_t dim() const { return coeffs.size(); }
};

// Unit-norm functional attaining the norm at x. Closed form for l_p with
// 1 < p < inf; elsewhere a central-difference gradient of the norm,
// normalized in the dual norm. Throws NotSmooth when one-sided directional
// derivatives disagree beyond tolerance, ZeroVector at the origin.
Functional supporting_functional(const Space& space, const Vec& x);

struct ApproxNorm {
  Space space;  // strictly convex l_p surrogate
  double slack; // two-sided equivalence constant s
};

// Strictly convex surrogate for an l_1 or l_inf base norm at the given
// level, with slack s satisfying
//   (1 - s) |x|_surrogate <= |x|_base <= (1 + s) |x|_surrogate
// and s -> 0 as the level grows.
ApproxNorm approximating_norm(const Space& base, unsigned level);

}  // namespace coapprox
