#pragma once

#include <cstddef>
#include <vector>

namespace coapprox {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Vec& a, double t);

// y += t * x
void axpy(double t, const Vec& x, Vec& y);

Vec zeros(std::size_t dim);
Vec unit_vector(std::size_t dim, std::size_t index, double value = 1.0);

double l1_norm(const Vec& a);
double l2_norm(const Vec& a);
double linf_norm(const Vec& a);

bool all_finite(const Vec& a);

}  // namespace coapprox
