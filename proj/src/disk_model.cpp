#include "hyptile/disk_model.hpp"

#include "hyptile/errors.hpp"

#include <algorithm>
#include <string>

namespace hyptile {

namespace {

Vec2 rotate_vec(Vec2 v, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

}  // namespace

HPoint::HPoint(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y) || x * x + y * y >= 1.0) {
        throw DomainError("point (" + std::to_string(x) + ", " + std::to_string(y) +
                          ") is not inside the unit disk");
    }
}

double radial_distance(double x) {
    if (!(x >= 0.0 && x < 1.0)) {
        throw DomainError("radial_distance: x must lie in [0, 1)");
    }
    return std::log1p(x) - std::log1p(-x);
}

HPoint radial_point(double d) {
    if (!(d >= 0.0)) {
        throw DomainError("radial_point: distance must be nonnegative");
    }
    return HPoint(std::tanh(d / 2.0), 0.0);
}

double hdist(const HPoint& z, const HPoint& w) {
    const auto zc = z.complex();
    const auto wc = w.complex();
    const double a = std::abs(1.0 - zc * std::conj(wc));
    const double b = std::abs(zc - wc);
    // |1 - z conj(w)|^2 - |z - w|^2 = (1 - |z|^2)(1 - |w|^2), so the
    // denominator a - b never has to be formed by cancellation.
    const double gap = (1.0 - z.sq_norm()) * (1.0 - w.sq_norm()) / (a + b);
    return std::log1p(2.0 * b / gap);
}

double hdist_tanh_form(const HPoint& z, const HPoint& w) {
    const auto zc = z.complex();
    const auto wc = w.complex();
    return 2.0 * std::atanh(std::abs(zc - wc) / std::abs(1.0 - zc * std::conj(wc)));
}

HPoint midpoint(const HPoint& p, const HPoint& q) {
    // Translate p to the origin, halve the radial distance of q's image,
    // translate back.
    const auto pc = p.complex();
    const auto w = (q.complex() - pc) / (1.0 - std::conj(pc) * q.complex());
    const auto half = w / (1.0 + std::sqrt(std::max(0.0, 1.0 - std::norm(w))));
    return HPoint((half + pc) / (1.0 + std::conj(pc) * half));
}

Geodesic geodesic_through(const HPoint& p, const HPoint& q) {
    const Vec2 pv = p.vec();
    const Vec2 qv = q.vec();
    const Vec2 chord = qv - pv;
    const double len = chord.norm();
    if (len < kCoincidenceTolerance) {
        throw DegenerateInput("geodesic_through: points coincide");
    }
    const Diameter diameter{chord / len};

    // Orthogonality plus incidence give c.p = (1 + |p|^2) / 2 and the same for q.
    const double det = pv.cross(qv);
    if (det == 0.0) {
        return diameter;
    }
    const double kp = 0.5 * (1.0 + pv.sq_norm());
    const double kq = 0.5 * (1.0 + qv.sq_norm());
    const Vec2 center{(kp * qv.y - kq * pv.y) / det, (kq * pv.x - kp * qv.x) / det};
    const double radius = std::sqrt(std::max(0.0, center.sq_norm() - 1.0));
    if (!std::isfinite(radius) || radius > kMaxArcRadius) {
        return diameter;
    }
    return Arc{center, radius, (pv - center).cross(qv - center) > 0.0};
}

bool on_geodesic(const HPoint& p, const Geodesic& g, double tol) {
    if (const auto* d = std::get_if<Diameter>(&g)) {
        return std::abs(d->direction.cross(p.vec())) <= tol;
    }
    const auto& arc = std::get<Arc>(g);
    return std::abs((p.vec() - arc.center).norm() - arc.radius) <= tol * std::max(1.0, arc.radius);
}

Vec2 tangent_at(const HPoint& p, const Geodesic& g) {
    if (const auto* d = std::get_if<Diameter>(&g)) {
        return d->direction;
    }
    const auto& arc = std::get<Arc>(g);
    const Vec2 radial = p.vec() - arc.center;
    const Vec2 t = Vec2{-radial.y, radial.x} / radial.norm();
    return arc.counterclockwise ? t : -t;
}

double angle_at(const HPoint& p, const Geodesic& g1, const Geodesic& g2) {
    if (!on_geodesic(p, g1) || !on_geodesic(p, g2)) {
        throw NotIncident("angle_at: point does not lie on both geodesics");
    }
    const Vec2 t1 = tangent_at(p, g1);
    const Vec2 t2 = tangent_at(p, g2);
    return std::atan2(std::abs(t1.cross(t2)), t1.dot(t2));
}

HPoint reflect(const HPoint& p, const Geodesic& g) {
    if (const auto* d = std::get_if<Diameter>(&g)) {
        const Vec2 v = p.vec();
        return HPoint(d->direction * (2.0 * v.dot(d->direction)) - v);
    }
    const auto& arc = std::get<Arc>(g);
    const Vec2 v = p.vec() - arc.center;
    return HPoint(arc.center + v * (arc.radius * arc.radius / v.sq_norm()));
}

HPoint reflect_across(const HPoint& z, const HPoint& a, const HPoint& b) {
    const auto ac = a.complex();
    auto to_origin = [&](std::complex<double> c) { return (c - ac) / (1.0 - std::conj(ac) * c); };
    const auto w = to_origin(b.complex());
    const double len = std::abs(w);
    if (len < kCoincidenceTolerance) {
        throw DegenerateInput("reflect_across: mirror points coincide");
    }
    const auto u = w / len;
    const auto image = u * u * std::conj(to_origin(z.complex()));
    return HPoint((image + ac) / (1.0 + std::conj(ac) * image));
}

HPoint rotate(const HPoint& p, double theta) {
    return HPoint(rotate_vec(p.vec(), theta));
}

}  // namespace hyptile
