#pragma once

#include <functional>
#include <memory>
#include <variant>
#include <vector>

#include "coapprox/space.hpp"

namespace coapprox {

// Closed half-space {x : f(x) <= level} in an ambient normed space.
// The functional is kept at unit dual norm.
struct HalfSpace {
  Functional f;
  double level = 0.0;
  Space space;

  bool contains(const Vec& x, double slack = 1e-9) const {
    return f(x) <= level + slack;
  }
};

// Normalizes coeffs (and the level with them) to unit dual norm.
HalfSpace make_halfspace(const Space& space, Vec coeffs, double level);

// Bounded convex set with 0 in its interior. Carries Euclidean certificates
// r, R with B2(0, r) inside the body and the body inside B2(0, R); all the
// gauge machinery brackets against these.
class Body {
 public:
  struct Vertices {
    std::vector<Vec> points;  // body = convex hull
  };
  struct NormBall {
    Space space;
    Vec center;
    double radius;
  };
  struct HalfSpaceList {
    std::vector<HalfSpace> faces;
  };
  struct Oracle {
    std::function<bool(const Vec&)> member;  // must be pure
  };
  using Rep = std::variant<Vertices, NormBall, HalfSpaceList, Oracle>;

  static Body from_vertices(std::vector<Vec> points, double inner_radius);
  static Body norm_ball(const Space& space, Vec center, double radius);
  static Body from_halfspaces(std::vector<HalfSpace> faces, double outer_radius);
  static Body from_oracle(std::size_t dim, std::function<bool(const Vec&)> member,
                          double inner_radius, double outer_radius);

  // Affine images may lose the interior certificate. Such bodies still
  // answer membership and support queries; gauge-based operations refuse
  // them until a fresh certificate is supplied.
  static Body uncertified(Rep rep, std::size_t dim, double inner_radius,
                          double outer_radius);

  std::size_t dim() const { return dim_; }
  double inner_radius() const { return inner_radius_; }
  double outer_radius() const { return outer_radius_; }
  bool has_interior() const { return inner_radius_ > 0.0; }
  const Rep& rep() const { return rep_; }

  // Membership with boundary slack proportional to the outer radius.
  // Vertex hulls decide by a feasibility solve over hull coefficients.
  bool contains(const Vec& x) const;

 private:
  Body(Rep rep, std::size_t dim, double r, double R)
      : rep_(std::move(rep)), dim_(dim), inner_radius_(r), outer_radius_(R) {}

  Rep rep_;
  std::size_t dim_;
  double inner_radius_;
  double outer_radius_;
};

// Convex hull membership by a phase-1 feasibility solve.
bool in_convex_hull(const std::vector<Vec>& points, const Vec& x);

}  // namespace coapprox
