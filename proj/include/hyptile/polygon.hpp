#pragma once

#include "hyptile/disk_model.hpp"

#include <vector>

namespace hyptile {

/// A regular p-gon centred at the origin, parameterised by half of its
/// interior angle. Exists iff 0 < half_angle and half_angle + pi/p < pi/2.
struct RegularPolygonSpec {
    int sides = 8;
    double half_angle = 0.0;
};

/// Throws NoSuchPolygon when the spec describes no hyperbolic polygon.
void validate(const RegularPolygonSpec& spec);

struct PolygonRadii {
    double inradius = 0.0;       // origin to edge midpoint
    double circumradius = 0.0;   // origin to vertex
};

struct PolygonGeometry {
    RegularPolygonSpec spec;
    std::vector<HPoint> vertices;    // P_1..P_p, counterclockwise from +x
    std::vector<HPoint> midpoints;   // Q_i is the midpoint of P_i P_{i+1}
    double circumradius = 0.0;
    double inradius = 0.0;
};

/// cosh(circumradius) = cot(alpha) cot(pi/p), cosh(inradius) = cos(alpha) / sin(pi/p).
PolygonRadii regular_polygon_radii(const RegularPolygonSpec& spec);

PolygonGeometry regular_polygon_geometry(const RegularPolygonSpec& spec);

/// Hyperbolic length of one side: cosh(side / 2) = cos(pi/p) / sin(alpha).
double regular_polygon_side(const RegularPolygonSpec& spec);

}  // namespace hyptile
