#include "coapprox/realify.hpp"

#include <cmath>
#include <stdexcept>

#include "coapprox/errors.hpp"
#include "coapprox/rng.hpp"

namespace coapprox {

ComplexVec make_complex(Vec re, Vec im) {
  if (re.size() != im.size())
    throw DimensionMismatch("make_complex: re and im must have equal length");
  return ComplexVec{std::move(re), std::move(im)};
}

Vec realify(const ComplexVec& z) {
  Vec w(2 * z.dim());
  for (std::size_t j = 0; j < z.dim(); ++j) {
    w[2 * j] = z.re[j];
    w[2 * j + 1] = z.im[j];
  }
  return w;
}

ComplexVec unrealify(const Vec& w) {
  if (w.size() % 2 != 0) throw DimensionMismatch("unrealify: odd length");
  ComplexVec z;
  z.re.resize(w.size() / 2);
  z.im.resize(w.size() / 2);
  for (std::size_t j = 0; j < z.re.size(); ++j) {
    z.re[j] = w[2 * j];
    z.im[j] = w[2 * j + 1];
  }
  return z;
}

namespace {

Vec moduli(const ComplexVec& z) {
  Vec m(z.dim());
  for (std::size_t j = 0; j < z.dim(); ++j) m[j] = std::hypot(z.re[j], z.im[j]);
  return m;
}

}  // namespace

double complex_norm(const Space& space, const ComplexVec& z) {
  if (space.kind() == NormKind::GaugeBody)
    throw std::invalid_argument("complex_norm: gauge-body spaces are real only");
  if (z.dim() != space.dim()) throw DimensionMismatch("complex_norm: dimension mismatch");
  return space.norm(moduli(z));
}

double realified_norm(const Space& space, const Vec& w) {
  return complex_norm(space, unrealify(w));
}

double complex_dual_norm(const Space& space, const ComplexVec& f) {
  if (f.dim() != space.dim())
    throw DimensionMismatch("complex_dual_norm: dimension mismatch");
  return space.dual_norm(moduli(f));
}

Functional real_part_functional(const ComplexVec& f) {
  // Re(f_j x_j) = re(f_j) a_j - im(f_j) b_j on the interleaved layout.
  Vec g(2 * f.dim());
  for (std::size_t j = 0; j < f.dim(); ++j) {
    g[2 * j] = f.re[j];
    g[2 * j + 1] = -f.im[j];
  }
  return Functional{std::move(g)};
}

namespace {

// Phase-aligned Holder witness: a unit vector where |f| attains the dual
// norm, so the phase sweep below reaches the supremum.
ComplexVec aligned_witness(const Space& space, const ComplexVec& f) {
  const std::size_t n = f.dim();
  const Vec m = moduli(f);
  ComplexVec x;
  x.re.assign(n, 0.0);
  x.im.assign(n, 0.0);
  const auto put = [&](std::size_t j, double weight) {
    if (m[j] < 1e-300) return;
    x.re[j] = weight * f.re[j] / m[j];
    x.im[j] = -weight * f.im[j] / m[j];  // conjugate phase
  };
  if (space.kind() == NormKind::Lp && space.p() == 1.0) {
    std::size_t jmax = 0;
    for (std::size_t j = 1; j < n; ++j)
      if (m[j] > m[jmax]) jmax = j;
    put(jmax, 1.0);
    return x;
  }
  if (space.kind() == NormKind::LInf) {
    for (std::size_t j = 0; j < n; ++j) put(j, m[j] > 1e-300 ? 1.0 : 0.0);
    return x;
  }
  const double q = space.p() / (space.p() - 1.0);
  for (std::size_t j = 0; j < n; ++j) put(j, std::pow(m[j], q - 1.0));
  const double nx = complex_norm(space, x);
  if (nx > 0.0)
    for (std::size_t j = 0; j < n; ++j) {
      x.re[j] /= nx;
      x.im[j] /= nx;
    }
  return x;
}

}  // namespace

double real_part_dual_norm_sampled(const Space& space, const ComplexVec& f,
                                   std::size_t sphere_samples,
                                   std::size_t phase_samples, std::uint64_t seed) {
  const Functional g = real_part_functional(f);
  const std::size_t n = f.dim();
  double best = 0.0;

  const auto sweep_phases = [&](const ComplexVec& z) {
    for (std::size_t k = 0; k < phase_samples; ++k) {
      const double t =
          6.283185307179586 * static_cast<double>(k) / static_cast<double>(phase_samples);
      const double ct = std::cos(t);
      const double st = std::sin(t);
      ComplexVec rotated;
      rotated.re.resize(n);
      rotated.im.resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        rotated.re[j] = ct * z.re[j] - st * z.im[j];
        rotated.im[j] = st * z.re[j] + ct * z.im[j];
      }
      best = std::max(best, g(realify(rotated)));
    }
  };

  sweep_phases(aligned_witness(space, f));
  for (std::size_t i = 0; i < sphere_samples; ++i) {
    Rng rng(stream_seed(seed, i));
    ComplexVec z;
    z.re.resize(n);
    z.im.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      z.re[j] = rng.normal();
      z.im[j] = rng.normal();
    }
    const double nz = complex_norm(space, z);
    if (nz < 1e-9) continue;
    for (std::size_t j = 0; j < n; ++j) {
      z.re[j] /= nz;
      z.im[j] /= nz;
    }
    sweep_phases(z);
  }
  return best;
}

}  // namespace coapprox
