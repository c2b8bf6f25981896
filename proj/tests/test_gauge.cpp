#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "coapprox/errors.hpp"
#include "coapprox/gauge.hpp"
#include "coapprox/rng.hpp"
#include "support/lp_gauge_oracle.hpp"

using namespace coapprox;

namespace {

Body unit_box2() { return Body::from_vertices({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}, 1.0); }

Body random_polytope(std::size_t dim, std::size_t extra, Rng& rng) {
  std::vector<Vec> pts;
  for (std::size_t j = 0; j < dim; ++j) {
    pts.push_back(unit_vector(dim, j, 0.4));
    pts.push_back(unit_vector(dim, j, -0.4));
  }
  for (std::size_t i = 0; i < extra; ++i) pts.push_back(rng.box(dim, 1.5));
  // the embedded cross-polytope of radius 0.4 certifies the interior
  return Body::from_vertices(std::move(pts), 0.4 / std::sqrt(double(dim)));
}

}  // namespace

TEST_CASE("membership") {
  const Body ball = Body::norm_ball(Space::linf(2), {0, 0}, 1.0);
  CHECK(ball.contains({0.5, -0.5}));
  CHECK_FALSE(ball.contains({1.5, 0.0}));
  const Body cross = Body::from_vertices({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 0.5);
  CHECK(cross.contains({0.4, 0.4}));
  CHECK_FALSE(cross.contains({0.6, 0.5}));
  CHECK_THROWS_AS(ball.contains({1, 2, 3}), DimensionMismatch);
}

TEST_CASE("gauge basics") {
  const Body ball = Body::norm_ball(Space::linf(2), {0, 0}, 1.0);
  CHECK(gauge(ball, {2, 0}, 1e-10) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(gauge(ball, {0, 0}) == 0.0);

  const Body box = Body::from_vertices({{-1, -1}, {3, -1}, {3, 3}, {-1, 3}}, 1.0);
  CHECK(gauge(box, {3, 0}, 1e-10) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("gauge agrees with the enumeration oracle on random polytopes") {
  Rng rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t dim = 2 + (trial % 3);
    const Body body = random_polytope(dim, 6, rng);
    const auto& verts = std::get<Body::Vertices>(body.rep()).points;
    for (int q = 0; q < 6; ++q) {
      const Vec x = rng.box(dim, 2.0);
      if (l2_norm(x) < 0.2) continue;
      const double via_bisection = gauge(body, x, 1e-10);
      const double via_oracle = coapprox_test::lp_gauge_oracle(verts, x);
      CHECK(via_bisection == doctest::Approx(via_oracle).epsilon(2e-7));
    }
  }
}

TEST_CASE("gauge convexity and positive homogeneity") {
  Rng rng(13);
  const Body body = random_polytope(3, 8, rng);
  for (int i = 0; i < 1200; ++i) {
    const Vec x = rng.box(3, 2.0);
    const Vec y = rng.box(3, 2.0);
    const double lam = rng.uniform();
    Vec mix = scaled(x, lam);
    axpy(1.0 - lam, y, mix);
    CHECK(gauge(body, mix) <= lam * gauge(body, x) + (1.0 - lam) * gauge(body, y) + 1e-6);
    const double a = rng.uniform(0.0, 3.0);
    CHECK(std::abs(gauge(body, scaled(x, a)) - a * gauge(body, x)) <=
          1e-8 * (1.0 + gauge(body, x)));
  }
}

TEST_CASE("boundary points") {
  const Body disc = Body::norm_ball(Space::l2(2), {0, 0}, 1.0);
  const Vec z = boundary_point(disc, {3, 4});
  CHECK(z[0] == doctest::Approx(0.6).epsilon(1e-9));
  CHECK(z[1] == doctest::Approx(0.8).epsilon(1e-9));

  // hull membership decides through a feasibility solve, whose tolerance
  // caps the attainable boundary accuracy
  const Vec zb = boundary_point(unit_box2(), {2, 1});
  CHECK(zb[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(zb[1] == doctest::Approx(0.5).epsilon(1e-6));

  CHECK_THROWS_AS(boundary_point(disc, {0, 0}), ZeroVector);

  Rng rng(17);
  const Body poly = random_polytope(3, 10, rng);
  for (int i = 0; i < 1000; ++i) {
    const Vec dir = rng.sphere_l2(3);
    CHECK(gauge(poly, boundary_point(poly, dir)) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("supporting half-spaces") {
  const Body disc = Body::norm_ball(Space::l2(2), {0, 0}, 1.0);
  const HalfSpace hs = supporting_halfspace(Space::l2(2), disc, {0.6, 0.8});
  CHECK(hs.f.coeffs[0] == doctest::Approx(0.6).epsilon(1e-6));
  CHECK(hs.f.coeffs[1] == doctest::Approx(0.8).epsilon(1e-6));
  CHECK(hs.level == doctest::Approx(1.0).epsilon(1e-6));

  const Body box = unit_box2();
  const HalfSpace face = supporting_halfspace(Space::linf(2), box, {1.0, 0.5});
  CHECK(face.f.coeffs[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(face.f.coeffs[1] == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(face.level == doctest::Approx(1.0).epsilon(1e-6));

  CHECK_THROWS_AS(supporting_halfspace(Space::linf(2), box, {1.0, 1.0}), NotSmooth);
  CHECK_THROWS_AS(supporting_halfspace(Space::linf(2), box, {0.2, 0.1}), NotOnBoundary);
}

TEST_CASE("box decomposition recovers the box") {
  const Body box = unit_box2();
  const auto faces = decompose(Space::linf(2), box, 4, axis_sampler(2));
  CHECK(faces.size() == 4);
  for (const auto& f : faces) CHECK(f.level == doctest::Approx(1.0).epsilon(1e-6));
  const Body hull = intersection_body(faces, 8.0);
  CHECK(hausdorff_estimate(Space::linf(2), box, hull, 128) <= 1e-6);
  CHECK_THROWS_AS(decompose(Space::linf(2), box, 0, axis_sampler(2)),
                  std::invalid_argument);
}

TEST_CASE("disc decomposition error matches the circumscribed polygon") {
  const Body disc = Body::norm_ball(Space::l2(2), {0, 0}, 1.0);
  for (std::size_t n : {8u, 16u, 32u}) {
    const auto faces = decompose(Space::l2(2), disc, n, equiangular_sampler(n));
    CHECK(faces.size() == n);
    const Body poly = intersection_body(faces, 4.0);
    const double bound = 1.0 / std::cos(3.14159265358979323846 / double(n)) - 1.0;
    const double est = hausdorff_estimate(Space::l2(2), disc, poly, 512);
    CHECK(est <= bound + 1e-3);
    CHECK(est >= 0.0);
  }
}

TEST_CASE("each decomposition face contains the whole body") {
  Rng rng(23);
  const Body poly = random_polytope(3, 10, rng);
  const auto faces = decompose(Space::l2(3), poly, 12, lowdisc_sampler(3, 5));
  const auto& verts = std::get<Body::Vertices>(poly.rep()).points;
  for (const auto& hs : faces)
    for (const auto& v : verts) CHECK(hs.f(v) <= hs.level + 1e-6);
}

TEST_CASE("decomposition tightens monotonically") {
  const Body disc = Body::norm_ball(Space::l2(2), {0, 0}, 1.0);
  const auto faces = decompose(Space::l2(2), disc, 24, lowdisc_sampler(2, 3));
  double prev = 1e300;
  for (std::size_t n = 4; n <= faces.size(); n += 4) {
    const Body poly = intersection_body({faces.begin(), faces.begin() + n}, 8.0);
    const double est = hausdorff_estimate(Space::l2(2), disc, poly, 256);
    CHECK(est <= prev + 1e-3);
    prev = est;
  }
}

TEST_CASE("hausdorff estimate") {
  const Body ball = Body::norm_ball(Space::linf(2), {0, 0}, 1.0);
  CHECK(hausdorff_estimate(Space::linf(2), ball, ball, 64) == 0.0);
  const Body twice = Body::norm_ball(Space::linf(2), {0, 0}, 2.0);
  CHECK(hausdorff_estimate(Space::linf(2), ball, twice, 256) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("oracle bodies stay convex along sampled segments") {
  // the oracle representation is trusted convex; sampled segments verify it
  const Body oracle = Body::from_oracle(
      2, [](const Vec& v) { return std::abs(v[0]) + 0.5 * std::abs(v[1]) <= 1.0; }, 0.5,
      2.0);
  Rng rng(37);
  int checked = 0;
  for (int i = 0; i < 20000 && checked < 500; ++i) {
    const Vec x = rng.box(2, 1.5);
    const Vec y = rng.box(2, 1.5);
    if (!oracle.contains(x) || !oracle.contains(y)) continue;
    Vec mid = scaled(x, 0.5);
    axpy(0.5, y, mid);
    CHECK(oracle.contains(mid));
    ++checked;
  }
  CHECK(checked == 500);
}

TEST_CASE("translate and scale") {
  const Body box = unit_box2();

  // shifting by a full edge gives the box [0,2] x [-1,1]; 0 lands on the
  // boundary, so the body keeps working but loses its gauge certificate
  const Body shifted = translate(box, {1, 0});
  CHECK(shifted.contains({1.9, 0.9}));
  CHECK(shifted.contains({0.0, -1.0}));
  CHECK_FALSE(shifted.contains({-0.5, 0.0}));
  CHECK(support_function(shifted, {1, 0}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(support_function(shifted, {-1, 0}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(support_function(shifted, {0, 1}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(shifted.has_interior());
  CHECK_THROWS_AS(gauge(shifted, {1, 0}), DegenerateBody);

  // interior-preserving shifts keep a recomputed certificate
  const Body nudged = translate(box, {0.5, 0.25});
  CHECK(nudged.has_interior());
  CHECK(gauge(nudged, {1.5, 1.25}, 1e-10) == doctest::Approx(1.0).epsilon(1e-6));

  const Body ball = Body::norm_ball(Space::l2(2), {0, 0}, 1.0);
  const Body big = scale(ball, 2.0);
  CHECK(gauge(big, {2, 0}) == doctest::Approx(1.0).epsilon(1e-8));

  CHECK_THROWS_AS(scale(ball, 0.0), DegenerateBody);

  Rng rng(29);
  const Body poly = random_polytope(3, 8, rng);
  const Body tripled = scale(poly, 3.0);
  for (int i = 0; i < 50; ++i) {
    const Vec x = rng.box(3, 2.0);
    CHECK(std::abs(gauge(tripled, x) - gauge(poly, x) / 3.0) <= 1e-8);
  }
}
