#include "hyptile/polygon.hpp"

#include "hyptile/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hyptile {

namespace {

constexpr double kPi = std::numbers::pi;

// Euclidean radius of the point at hyperbolic distance d from the origin;
// equal to (e^d - 1) / (e^d + 1).
double euclidean_radius(double d) { return std::tanh(d / 2.0); }

}  // namespace

void validate(const RegularPolygonSpec& spec) {
    if (spec.sides < 3) {
        throw NoSuchPolygon("no such polygon: at least 3 sides are required");
    }
    const double central_half = kPi / spec.sides;
    if (!(spec.half_angle > 0.0) || !(spec.half_angle + central_half < kPi / 2.0)) {
        throw NoSuchPolygon("no such polygon: need 0 < alpha < pi/2 - pi/" +
                            std::to_string(spec.sides));
    }
}

PolygonRadii regular_polygon_radii(const RegularPolygonSpec& spec) {
    validate(spec);
    const double alpha = spec.half_angle;
    const double central_half = kPi / spec.sides;
    const double s = std::sin(central_half);
    // Written as sinh^2(r/2) = (cosh r - 1) / 2 so both radii stay accurate
    // as alpha + pi/p approaches pi/2 and the polygon shrinks to a point.
    //   cot a cot t - 1 = cos(a + t) / (sin a sin t)
    //   cos a - sin t   = 2 sin((a + pi/2 - t) / 2) sin((pi/2 - t - a) / 2)
    const double circ = std::cos(alpha + central_half) / (2.0 * std::sin(alpha) * s);
    const double in = std::sin((alpha + kPi / 2.0 - central_half) / 2.0) *
                      std::sin((kPi / 2.0 - central_half - alpha) / 2.0) / s;
    return {2.0 * std::asinh(std::sqrt(std::max(0.0, in))),
            2.0 * std::asinh(std::sqrt(std::max(0.0, circ)))};
}

PolygonGeometry regular_polygon_geometry(const RegularPolygonSpec& spec) {
    const PolygonRadii radii = regular_polygon_radii(spec);
    PolygonGeometry g;
    g.spec = spec;
    g.circumradius = radii.circumradius;
    g.inradius = radii.inradius;

    const int p = spec.sides;
    const double vertex_r = euclidean_radius(radii.circumradius);
    const double mid_r = euclidean_radius(radii.inradius);
    g.vertices.reserve(p);
    g.midpoints.reserve(p);
    for (int k = 0; k < p; ++k) {
        const double theta = 2.0 * kPi * k / p;
        const double phi = theta + kPi / p;
        g.vertices.emplace_back(vertex_r * std::cos(theta), vertex_r * std::sin(theta));
        g.midpoints.emplace_back(mid_r * std::cos(phi), mid_r * std::sin(phi));
    }
    return g;
}

double regular_polygon_side(const RegularPolygonSpec& spec) {
    validate(spec);
    const double half = std::acosh(std::cos(kPi / spec.sides) / std::sin(spec.half_angle));
    return 2.0 * half;
}

}  // namespace hyptile
