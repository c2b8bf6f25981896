#include "coapprox/rng.hpp"

#include <cmath>

namespace coapprox {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (0x632be59bd9b4e019ULL * (index + 1)));
}

std::uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t x = state_;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * kInv53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  if (u1 < 1e-300) u1 = 1e-300;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  have_spare_ = true;
  spare_ = r * std::sin(kTwoPi * u2);
  return r * std::cos(kTwoPi * u2);
}

Vec Rng::box(std::size_t dim, double half_width) {
  Vec v(dim);
  for (auto& c : v) c = uniform(-half_width, half_width);
  return v;
}

Vec Rng::sphere_l2(std::size_t dim) {
  Vec v(dim);
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (auto& c : v) {
      c = normal();
      n2 += c * c;
    }
  } while (n2 < 1e-24);
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& c : v) c *= inv;
  return v;
}

double halton(std::uint64_t index, std::uint32_t base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

namespace {
constexpr std::uint32_t kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                     23, 29, 31, 37, 41, 43, 47, 53};
}

Vec lowdisc_direction(std::size_t dim, std::uint64_t index, std::uint64_t salt) {
  // Halton pairs through Box-Muller, then normalize. The salt offsets the
  // sequence so independent consumers do not share points.
  const std::uint64_t k = index + 1 + (splitmix64(salt) % 8191) * (salt ? 1 : 0);
  Vec v(dim);
  std::size_t written = 0;
  std::size_t pair = 0;
  while (written < dim) {
    double u1 = halton(k, kPrimes[(2 * pair) % 16]);
    double u2 = halton(k, kPrimes[(2 * pair + 1) % 16]);
    if (u1 < 1e-12) u1 = 1e-12;
    const double r = std::sqrt(-2.0 * std::log(u1));
    v[written++] = r * std::cos(kTwoPi * u2);
    if (written < dim) v[written++] = r * std::sin(kTwoPi * u2);
    ++pair;
  }
  const double n = l2_norm(v);
  if (n < 1e-12) return unit_vector(dim, 0);
  return scaled(v, 1.0 / n);
}

}  // namespace coapprox
