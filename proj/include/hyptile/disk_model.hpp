#pragma once

#include <cmath>
#include <complex>
#include <variant>

namespace hyptile {

/// Plain Euclidean vector / point in the model plane.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double k) const { return {x * k, y * k}; }
    constexpr Vec2 operator/(double k) const { return {x / k, y / k}; }
    constexpr bool operator==(const Vec2&) const = default;

    constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
    constexpr double cross(Vec2 o) const { return x * o.y - y * o.x; }
    constexpr double sq_norm() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }
};

/// A point of the open unit disk. Construction throws DomainError unless
/// x^2 + y^2 < 1 and both coordinates are finite.
class HPoint {
public:
    HPoint() = default;
    HPoint(double x, double y);
    explicit HPoint(Vec2 v) : HPoint(v.x, v.y) {}
    explicit HPoint(std::complex<double> z) : HPoint(z.real(), z.imag()) {}

    double x() const noexcept { return x_; }
    double y() const noexcept { return y_; }
    Vec2 vec() const noexcept { return {x_, y_}; }
    std::complex<double> complex() const noexcept { return {x_, y_}; }
    double sq_norm() const noexcept { return x_ * x_ + y_ * y_; }

    bool operator==(const HPoint&) const = default;

private:
    double x_ = 0.0;
    double y_ = 0.0;
};

/// Hyperbolic line through the origin. `direction` is a unit vector and
/// also orients the line.
struct Diameter {
    Vec2 direction;
};

/// Hyperbolic line represented by a circle orthogonal to the absolute
/// (|center|^2 = radius^2 + 1). `counterclockwise` orients travel along the
/// circle as seen from its center.
struct Arc {
    Vec2 center;
    double radius = 0.0;
    bool counterclockwise = true;
};

using Geodesic = std::variant<Diameter, Arc>;

/// Points closer than this are treated as coincident.
inline constexpr double kCoincidenceTolerance = 1e-12;
/// Arcs with a larger radius are replaced by diameters.
inline constexpr double kMaxArcRadius = 1e6;
/// Default tolerance for point-on-geodesic tests.
inline constexpr double kIncidenceTolerance = 1e-9;

/// Hyperbolic distance from the origin to the model point at Euclidean
/// radius x: log((1 + x) / (1 - x)). Throws DomainError outside [0, 1).
double radial_distance(double x);

/// Inverse of radial_distance: the point (tanh(d / 2), 0).
HPoint radial_point(double d);

/// Hyperbolic distance, log form:
/// ln((|1 - z conj(w)| + |z - w|) / (|1 - z conj(w)| - |z - w|)).
double hdist(const HPoint& z, const HPoint& w);

/// Hyperbolic distance, tanh form: 2 artanh(|z - w| / |1 - z conj(w)|).
double hdist_tanh_form(const HPoint& z, const HPoint& w);

/// Hyperbolic midpoint of the segment pq.
HPoint midpoint(const HPoint& p, const HPoint& q);

/// The geodesic through p and q, oriented from p towards q.
/// Throws DegenerateInput when the points coincide.
Geodesic geodesic_through(const HPoint& p, const HPoint& q);

bool on_geodesic(const HPoint& p, const Geodesic& g, double tol = kIncidenceTolerance);

/// Unit tangent of the oriented geodesic at p (p is assumed to lie on g).
Vec2 tangent_at(const HPoint& p, const Geodesic& g);

/// Angle in [0, pi] between the oriented tangents of g1 and g2 at p. The
/// model is conformal, so this is the hyperbolic angle.
/// Throws NotIncident when p is not on both geodesics.
double angle_at(const HPoint& p, const Geodesic& g1, const Geodesic& g2);

/// Hyperbolic reflection across g: Euclidean mirror for a diameter, circle
/// inversion z -> c + r^2 / conj(z - c) for an arc.
HPoint reflect(const HPoint& p, const Geodesic& g);

/// Reflection across the geodesic through a and b, computed by moving a to
/// the origin where the mirror is a diameter. Unlike the circle inversion it
/// keeps full precision for nearly straight arcs close to the absolute.
/// Throws DegenerateInput when a and b coincide.
HPoint reflect_across(const HPoint& z, const HPoint& a, const HPoint& b);

/// Euclidean rotation about the origin (a model isometry).
HPoint rotate(const HPoint& p, double theta);

}  // namespace hyptile
