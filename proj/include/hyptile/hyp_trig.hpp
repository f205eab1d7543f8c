#pragma once

#include <array>

namespace hyptile {

/// Hyperbolic triangle: sides a, b, c (curvature -1 units) and the angles
/// alpha, beta, gamma opposite them (radians).
struct Triangle {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

/// sinh(side) / sin(opposite angle) for each of the three pairs. Equal for
/// every hyperbolic triangle (law of sines).
std::array<double, 3> sine_ratios(const Triangle& t);

/// Side opposite alpha from the three angles (second law of cosines):
/// cosh a = (cos alpha + cos beta cos gamma) / (sin beta sin gamma).
double side_from_angles(double alpha, double beta, double gamma);

/// Side opposite gamma from the two enclosing sides (first law of cosines):
/// cosh c = cosh a cosh b - sinh a sinh b cos gamma.
double side_from_sides_angle(double a, double b, double gamma);

/// Angle opposite c from the three sides.
double angle_from_sides(double a, double b, double c);

/// Side opposite beta from the law of sines: sinh b = sinh a sin beta / sin alpha.
double side_from_sines(double a, double alpha, double beta);

/// Right triangle with beta = pi/2 from the two acute angles.
Triangle right_triangle_solve(double alpha, double gamma);

/// Area of a triangle with the given angles: pi - alpha - beta - gamma.
double defect(double alpha, double beta, double gamma);

/// Builds the full triangle from its three angles.
Triangle solve_from_angles(double alpha, double beta, double gamma);

/// Builds the full triangle from its three sides.
Triangle solve_from_sides(double a, double b, double c);

}  // namespace hyptile
