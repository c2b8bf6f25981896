#pragma once

#include <cstdint>

#include "coapprox/vec.hpp"

namespace coapprox {

// Deterministic generator with a fixed algorithm (splitmix64 core), so
// sampled values are identical across platforms and thread counts.
// std::mt19937 would be portable too, but the std distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  double normal();  // Box-Muller

  Vec box(std::size_t dim, double half_width);
  Vec sphere_l2(std::size_t dim);

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

// Seed for an independent per-index stream; lets parallel loops draw the
// same samples regardless of iteration order.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

// Halton radical inverse in the given prime base.
double halton(std::uint64_t index, std::uint32_t base);

// Low-discrepancy direction on the Euclidean unit sphere; the sequence is
// dense in the limit and fully determined by (dim, index, salt).
Vec lowdisc_direction(std::size_t dim, std::uint64_t index, std::uint64_t salt = 0);

}  // namespace coapprox
