#pragma once

#include "hyptile/disk_model.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace hyptile::testing {

inline constexpr double kPi = std::numbers::pi;

/// Uniform (by area) random point of the disk of radius max_r.
inline HPoint random_point(std::mt19937_64& rng, double max_r = 1.0 - 1e-9) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = max_r * std::sqrt(u(rng));
    const double t = 2.0 * kPi * u(rng);
    return HPoint(r * std::cos(t), r * std::sin(t));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Closed-form distance via the hyperboloid model; independent of both
/// library forms.
inline double acosh_distance(const HPoint& z, const HPoint& w) {
    const double dx = z.x() - w.x();
    const double dy = z.y() - w.y();
    return std::acosh(1.0 + 2.0 * (dx * dx + dy * dy) / ((1.0 - z.sq_norm()) * (1.0 - w.sq_norm())));
}

/// Composite Simpson rule.
template <typename F>
double simpson(F f, double a, double b, int n = 2000) {
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

}  // namespace hyptile::testing
