#pragma once

#include "hyptile/disk_model.hpp"
#include "hyptile/hyp_trig.hpp"
#include "hyptile/polygon.hpp"
#include "hyptile/tiling.hpp"

#include <string>
#include <variant>
#include <vector>

namespace hyptile {

struct EuclCircle {
    Vec2 center;
    double radius = 0.0;
};

/// Circle through three points. Throws Collinear when the points are
/// collinear or coincide.
EuclCircle circle_through(Vec2 a, Vec2 b, Vec2 c);

struct AbsoluteCircle {};

/// Arc of `circle` from `from` to `to` that passes through `through`.
struct GeodesicArc {
    EuclCircle circle;
    Vec2 from;
    Vec2 to;
    Vec2 through;
    bool counterclockwise = true;   // sweep direction from `from` to `to`
    double sweep = 0.0;             // swept angle, radians, in (0, 2*pi)
};

struct Segment {
    Vec2 from;
    Vec2 to;
};

struct Dot {
    Vec2 at;
    double radius = 0.008;   // model units
};

using Shape = std::variant<AbsoluteCircle, GeodesicArc, Segment, Dot>;

struct Style {
    double stroke_width = 1.0;   // pixels
    std::string color = "#1f3b73";
};

struct ScenePrimitive {
    Shape shape;
    Style style;
    /// Consecutive primitives sharing a non-empty group go in one <g id=...>.
    std::string group;
};

struct Scene {
    std::vector<ScenePrimitive> primitives;

    void add(Shape shape, Style style = {}, std::string group = {}) {
        primitives.push_back({std::move(shape), std::move(style), std::move(group)});
    }
};

/// Edge of a polygon through p, mid and q: an arc on circle_through(p, mid, q)
/// containing mid, or a Segment when the three points are collinear.
Shape edge_arc(const HPoint& p, const HPoint& mid, const HPoint& q);

struct SceneStyle {
    Style edge{};
    Style absolute{1.0, "#000000"};
    Style vertex{1.0, "#b22222"};
    Style midpoint{1.0, "#2e8b57"};
    bool show_vertices = false;
    bool show_midpoints = false;
};

Scene polygon_scene(const PolygonGeometry& geometry, const SceneStyle& style = {});

/// With dedup_edges, an edge shared by two tiles is drawn once.
Scene tiling_scene(const Tiling& tiling, bool dedup_edges = true, const SceneStyle& style = {});

/// Triangle with the gamma vertex at the origin and side b along +x.
Scene triangle_scene(const Triangle& triangle, const SceneStyle& style = {});

struct RenderOptions {
    int size_px = 800;
    double margin = 10.0;
    double stroke = 1.0;   // multiplies every primitive's stroke width
    int precision = 6;
};

/// SVG 1.1 document for the scene. Model coordinates [-1, 1]^2 map onto the
/// viewport with +y pointing up. A default absolute circle is drawn when the
/// scene has none. Throws DomainError when size_px <= 0.
std::string render_svg(const Scene& scene, const RenderOptions& options = {});

/// JSON export. Fields in order: p, alpha, vertices, midpoints,
/// circumradius, inradius; tilings add q, depth, tiles. Numbers carry 9
/// significant digits.
std::string export_json(const PolygonGeometry& geometry);
std::string export_json(const Tiling& tiling);
std::string export_json(const Triangle& triangle);

}  // namespace hyptile
