#pragma once

#include <cstdint>

#include "coapprox/space.hpp"

namespace coapprox {

// Complex vector split into coordinate-wise real and imaginary parts.
struct ComplexVec {
  Vec re;
  Vec im;

  std::size_t dim() const { return re.size(); }
};

ComplexVec make_complex(Vec re, Vec im);

// Coordinate splitting onto R^{2n}, interleaved as (a1, b1, a2, b2, ...).
// Additive and real-homogeneous; an isometry for the induced norm below.
Vec realify(const ComplexVec& z);
ComplexVec unrealify(const Vec& w);

// Norm of a complex vector in an l_p / l_inf space: the base norm applied
// to the coordinate moduli.
double complex_norm(const Space& space, const ComplexVec& z);

// Norm induced on the realified space: the complex norm read back through
// the interleaving, so realify is an isometry by construction.
double realified_norm(const Space& space, const Vec& w);

// Exact dual norm of a complex functional on l_p: Holder conjugate of the
// coefficient moduli.
double complex_dual_norm(const Space& space, const ComplexVec& f);

// Real part of a complex functional as a functional on the realified space:
// Re(sum f_j x_j) with x interleaved.
Functional real_part_functional(const ComplexVec& f);

// Sampled norm of the real-part functional over the realified unit sphere,
// sweeping phases e^{it} of sampled complex unit vectors. Converges to the
// complex dual norm; the sampling gap is the test tolerance.
double real_part_dual_norm_sampled(const Space& space, const ComplexVec& f,
                                   std::size_t sphere_samples,
                                   std::size_t phase_samples, std::uint64_t seed);

}  // namespace coapprox
