#include "hyptile/hyp_trig.hpp"

#include "hyptile/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hyptile {

namespace {

constexpr double kPi = std::numbers::pi;
// Inverse-trig arguments this close outside their domain are clamped.
constexpr double kClamp = 1e-12;

void require_angle(double angle, const char* what) {
    if (!(angle > 0.0 && angle < kPi)) {
        throw DomainError(std::string(what) + ": angles must lie in (0, pi)");
    }
}

void require_side(double side, const char* what) {
    if (!(side > 0.0) || !std::isfinite(side)) {
        throw DomainError(std::string(what) + ": sides must be positive");
    }
}

double clamped_acosh(double x) {
    if (x < 1.0 - kClamp) {
        throw NoSuchTriangle("no such triangle: cosh argument below 1");
    }
    return std::acosh(std::max(1.0, x));
}

double sq(double x) { return x * x; }

}  // namespace

std::array<double, 3> sine_ratios(const Triangle& t) {
    return {std::sinh(t.a) / std::sin(t.alpha), std::sinh(t.b) / std::sin(t.beta),
            std::sinh(t.c) / std::sin(t.gamma)};
}

double side_from_angles(double alpha, double beta, double gamma) {
    require_angle(alpha, "side_from_angles");
    require_angle(beta, "side_from_angles");
    require_angle(gamma, "side_from_angles");
    if (alpha + beta + gamma >= kPi) {
        throw NoSuchTriangle("no such triangle: angle sum must be below pi");
    }
    return clamped_acosh((std::cos(alpha) + std::cos(beta) * std::cos(gamma)) /
                         (std::sin(beta) * std::sin(gamma)));
}

double side_from_sides_angle(double a, double b, double gamma) {
    require_side(a, "side_from_sides_angle");
    require_side(b, "side_from_sides_angle");
    if (!(gamma >= 0.0 && gamma <= kPi)) {
        throw DomainError("side_from_sides_angle: angle must lie in [0, pi]");
    }
    // Half-angle form of cosh c = cosh a cosh b - sinh a sinh b cos gamma;
    // exact at gamma = 0 (c = |a - b|) where acosh(1 + eps) is not.
    const double s = sq(std::sinh((a - b) / 2.0)) +
                     std::sinh(a) * std::sinh(b) * sq(std::sin(gamma / 2.0));
    return 2.0 * std::asinh(std::sqrt(s));
}

double angle_from_sides(double a, double b, double c) {
    require_side(a, "angle_from_sides");
    require_side(b, "angle_from_sides");
    require_side(c, "angle_from_sides");
    const double scale = std::sinh(a) * std::sinh(b);
    const double half_c = std::sinh(c / 2.0);
    const double half_diff = std::sinh(std::abs(a - b) / 2.0);
    const double half_sum = std::sinh((a + b) / 2.0);
    // sin^2(gamma/2) and cos^2(gamma/2), each times sinh a sinh b.
    double sin_part = (half_c - half_diff) * (half_c + half_diff);
    double cos_part = (half_sum - half_c) * (half_sum + half_c);
    if (sin_part < -kClamp * scale || cos_part < -kClamp * scale) {
        throw NoSuchTriangle("no such triangle: sides violate the triangle inequality");
    }
    sin_part = std::max(0.0, sin_part);
    cos_part = std::max(0.0, cos_part);
    return 2.0 * std::atan2(std::sqrt(sin_part), std::sqrt(cos_part));
}

double side_from_sines(double a, double alpha, double beta) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
        throw DomainError("side_from_sines: side must be nonnegative");
    }
    require_angle(alpha, "side_from_sines");
    require_angle(beta, "side_from_sines");
    const double sin_alpha = std::sin(alpha);
    if (sin_alpha == 0.0) {
        throw DomainError("side_from_sines: sin(alpha) is zero");
    }
    return std::asinh(std::sinh(a) * std::sin(beta) / sin_alpha);
}

Triangle right_triangle_solve(double alpha, double gamma) {
    if (!(alpha > 0.0) || !(gamma > 0.0)) {
        throw DomainError("right_triangle_solve: angles must be positive");
    }
    if (alpha + gamma >= kPi / 2.0) {
        throw NoSuchTriangle("no such triangle: acute angles must sum below pi/2");
    }
    Triangle t;
    t.alpha = alpha;
    t.beta = kPi / 2.0;
    t.gamma = gamma;
    t.a = clamped_acosh(std::cos(alpha) / std::sin(gamma));
    t.b = clamped_acosh(1.0 / (std::tan(alpha) * std::tan(gamma)));
    t.c = clamped_acosh(std::cos(gamma) / std::sin(alpha));
    return t;
}

double defect(double alpha, double beta, double gamma) {
    if (!(alpha >= 0.0 && beta >= 0.0 && gamma >= 0.0)) {
        throw DomainError("defect: angles must be nonnegative");
    }
    const double sum = alpha + beta + gamma;
    if (sum >= kPi) {
        throw NoSuchTriangle("no such triangle: angle sum must be below pi");
    }
    return kPi - sum;
}

Triangle solve_from_angles(double alpha, double beta, double gamma) {
    Triangle t;
    t.alpha = alpha;
    t.beta = beta;
    t.gamma = gamma;
    t.a = side_from_angles(alpha, beta, gamma);
    t.b = side_from_angles(beta, gamma, alpha);
    t.c = side_from_angles(gamma, alpha, beta);
    return t;
}

Triangle solve_from_sides(double a, double b, double c) {
    Triangle t;
    t.a = a;
    t.b = b;
    t.c = c;
    t.gamma = angle_from_sides(a, b, c);
    t.alpha = angle_from_sides(b, c, a);
    t.beta = angle_from_sides(c, a, b);
    if (t.alpha == 0.0 || t.beta == 0.0 || t.gamma == 0.0) {
        throw NoSuchTriangle("no such triangle: sides are degenerate");
    }
    return t;
}

}  // namespace hyptile
