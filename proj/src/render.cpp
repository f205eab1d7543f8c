#include "hyptile/render.hpp"

#include "hyptile/errors.hpp"
#include "point_index.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

namespace hyptile {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double ccw_offset(double from, double to) {
    double d = std::fmod(to - from, kTwoPi);
    return d < 0.0 ? d + kTwoPi : d;
}

std::string escape_xml(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

/// Fixed-point formatting; "-0.000" prints as "0.000".
std::string fixed(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, value);
    std::string s(buf);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

class SvgWriter {
public:
    explicit SvgWriter(const RenderOptions& options)
        : opt_(options), scale_((options.size_px - 2.0 * options.margin) / 2.0) {}

    std::string x(double mx) const { return fixed(opt_.margin + (mx + 1.0) * scale_, opt_.precision); }
    std::string y(double my) const { return fixed(opt_.margin + (1.0 - my) * scale_, opt_.precision); }
    std::string len(double ml) const { return fixed(ml * scale_, opt_.precision); }
    std::string stroke(const Style& s) const {
        return "stroke=\"" + escape_xml(s.color) + "\" stroke-width=\"" +
               fixed(s.stroke_width * opt_.stroke, opt_.precision) + "\"";
    }

    std::string operator()(const AbsoluteCircle&, const Style& s) const {
        return "<circle class=\"absolute\" cx=\"" + x(0.0) + "\" cy=\"" + y(0.0) + "\" r=\"" +
               len(1.0) + "\" fill=\"none\" " + stroke(s) + "/>";
    }

    std::string operator()(const GeodesicArc& arc, const Style& s) const {
        // Screen y points down, so model-counterclockwise is SVG's negative sweep.
        const int large = arc.sweep > kPi ? 1 : 0;
        const int sweep = arc.counterclockwise ? 0 : 1;
        return "<path class=\"edge\" d=\"M " + x(arc.from.x) + " " + y(arc.from.y) + " A " +
               len(arc.circle.radius) + " " + len(arc.circle.radius) + " 0 " +
               std::to_string(large) + " " + std::to_string(sweep) + " " + x(arc.to.x) + " " +
               y(arc.to.y) + "\" fill=\"none\" " + stroke(s) + "/>";
    }

    std::string operator()(const Segment& seg, const Style& s) const {
        return "<line class=\"edge\" x1=\"" + x(seg.from.x) + "\" y1=\"" + y(seg.from.y) +
               "\" x2=\"" + x(seg.to.x) + "\" y2=\"" + y(seg.to.y) + "\" " + stroke(s) + "/>";
    }

    std::string operator()(const Dot& dot, const Style& s) const {
        return "<circle class=\"dot\" cx=\"" + x(dot.at.x) + "\" cy=\"" + y(dot.at.y) +
               "\" r=\"" + len(dot.radius) + "\" fill=\"" + escape_xml(s.color) + "\"/>";
    }

private:
    const RenderOptions& opt_;
    double scale_;
};

/// Rounds to 9 significant digits so the JSON dump prints at most that many.
double sig9(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

nlohmann::ordered_json point_json(const HPoint& p) {
    return nlohmann::ordered_json::array({sig9(p.x()), sig9(p.y())});
}

nlohmann::ordered_json points_json(const std::vector<HPoint>& pts) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& p : pts) {
        arr.push_back(point_json(p));
    }
    return arr;
}

nlohmann::ordered_json polygon_json(const PolygonGeometry& g) {
    nlohmann::ordered_json j;
    j["p"] = g.spec.sides;
    j["alpha"] = sig9(g.spec.half_angle);
    j["vertices"] = points_json(g.vertices);
    j["midpoints"] = points_json(g.midpoints);
    j["circumradius"] = sig9(g.circumradius);
    j["inradius"] = sig9(g.inradius);
    return j;
}

void add_edges(Scene& scene, const std::vector<HPoint>& vertices, const Style& style,
               const std::string& group) {
    const std::size_t p = vertices.size();
    for (std::size_t i = 0; i < p; ++i) {
        const HPoint& a = vertices[i];
        const HPoint& b = vertices[(i + 1) % p];
        scene.add(edge_arc(a, midpoint(a, b), b), style, group);
    }
}

}  // namespace

EuclCircle circle_through(Vec2 a, Vec2 b, Vec2 c) {
    const double x1 = a.x, y1 = a.y, x2 = b.x, y2 = b.y, x3 = c.x, y3 = c.y;
    const double den_x = 2.0 * (x2 - x1) * (y3 - y1) - 2.0 * (x3 - x1) * (y2 - y1);
    if (!(std::abs(den_x) > 1e-12)) {
        throw Collinear("circle_through: points are collinear or coincide");
    }
    const double den_y = 2.0 * (y2 - y1) * (x3 - x1) - 2.0 * (y3 - y1) * (x2 - x1);
    const double x0 = (x1 * x1 * (y2 - y3) + x2 * x2 * (y3 - y1) + x3 * x3 * (y1 - y2) -
                       (y2 - y1) * (y3 - y1) * (y3 - y2)) /
                      den_x;
    const double y0 = (y1 * y1 * (x2 - x3) + y2 * y2 * (x3 - x1) + y3 * y3 * (x1 - x2) -
                       (x2 - x1) * (x3 - x1) * (x3 - x2)) /
                      den_y;
    const Vec2 center{x0, y0};
    return {center, (a - center).norm()};
}

Shape edge_arc(const HPoint& p, const HPoint& mid, const HPoint& q) {
    const Vec2 pv = p.vec(), mv = mid.vec(), qv = q.vec();
    if ((pv - mv).norm() < kCoincidenceTolerance || (qv - mv).norm() < kCoincidenceTolerance ||
        (pv - qv).norm() < kCoincidenceTolerance) {
        throw DegenerateInput("edge_arc: points coincide");
    }
    EuclCircle circle;
    try {
        circle = circle_through(pv, mv, qv);
    } catch (const Collinear&) {
        return Segment{pv, qv};
    }
    auto angle = [&](Vec2 v) { return std::atan2(v.y - circle.center.y, v.x - circle.center.x); };
    const double start = angle(pv);
    const double to_end = ccw_offset(start, angle(qv));
    const double to_mid = ccw_offset(start, angle(mv));
    GeodesicArc arc{circle, pv, qv, mv, true, to_end};
    if (to_mid > to_end) {
        arc.counterclockwise = false;
        arc.sweep = kTwoPi - to_end;
    }
    return arc;
}

Scene polygon_scene(const PolygonGeometry& geometry, const SceneStyle& style) {
    Scene scene;
    scene.add(AbsoluteCircle{}, style.absolute);
    const std::size_t p = geometry.vertices.size();
    for (std::size_t i = 0; i < p; ++i) {
        scene.add(edge_arc(geometry.vertices[i], geometry.midpoints[i], geometry.vertices[(i + 1) % p]),
                  style.edge);
    }
    if (style.show_vertices) {
        for (const auto& v : geometry.vertices) {
            scene.add(Dot{v.vec()}, style.vertex);
        }
    }
    if (style.show_midpoints) {
        for (const auto& m : geometry.midpoints) {
            scene.add(Dot{m.vec()}, style.midpoint);
        }
    }
    return scene;
}

Scene tiling_scene(const Tiling& tiling, bool dedup_edges, const SceneStyle& style) {
    Scene scene;
    scene.add(AbsoluteCircle{}, style.absolute);
    detail::PointIndex drawn;
    std::size_t edge_count = 0;
    for (std::size_t t = 0; t < tiling.tiles.size(); ++t) {
        const auto& verts = tiling.tiles[t].vertices;
        const std::string group = "tile-" + std::to_string(t);
        const std::size_t p = verts.size();
        for (std::size_t i = 0; i < p; ++i) {
            const HPoint& a = verts[i];
            const HPoint& b = verts[(i + 1) % p];
            const HPoint mid = midpoint(a, b);
            if (dedup_edges) {
                // Edges are identified by their hyperbolic midpoints.
                if (drawn.insert(mid.vec(), edge_count) != edge_count) {
                    continue;
                }
                ++edge_count;
            }
            scene.add(edge_arc(a, mid, b), style.edge, group);
        }
        if (style.show_vertices) {
            for (const auto& v : verts) {
                scene.add(Dot{v.vec()}, style.vertex, group);
            }
        }
    }
    return scene;
}

Scene triangle_scene(const Triangle& triangle, const SceneStyle& style) {
    const HPoint c(0.0, 0.0);
    const HPoint a = radial_point(triangle.b);
    const HPoint b = rotate(radial_point(triangle.a), triangle.gamma);
    Scene scene;
    scene.add(AbsoluteCircle{}, style.absolute);
    add_edges(scene, {c, a, b}, style.edge, {});
    if (style.show_vertices) {
        for (const auto& v : {c, a, b}) {
            scene.add(Dot{v.vec()}, style.vertex);
        }
    }
    return scene;
}

std::string render_svg(const Scene& scene, const RenderOptions& options) {
    if (options.size_px <= 0) {
        throw DomainError("render_svg: size_px must be positive");
    }
    if (options.precision < 0 || options.precision > 17) {
        throw DomainError("render_svg: precision must lie in [0, 17]");
    }
    const SvgWriter writer(options);
    const std::string size = std::to_string(options.size_px);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
        << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";

    bool has_absolute = false;
    for (const auto& prim : scene.primitives) {
        has_absolute = has_absolute || std::holds_alternative<AbsoluteCircle>(prim.shape);
    }
    if (!has_absolute) {
        out << writer(AbsoluteCircle{}, SceneStyle{}.absolute) << "\n";
    }

    std::string open_group;
    for (const auto& prim : scene.primitives) {
        if (prim.group != open_group) {
            if (!open_group.empty()) {
                out << "</g>\n";
            }
            if (!prim.group.empty()) {
                out << "<g id=\"" << escape_xml(prim.group) << "\">\n";
            }
            open_group = prim.group;
        }
        out << std::visit([&](const auto& shape) { return writer(shape, prim.style); }, prim.shape)
            << "\n";
    }
    if (!open_group.empty()) {
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string export_json(const PolygonGeometry& geometry) {
    return polygon_json(geometry).dump(2) + "\n";
}

std::string export_json(const Tiling& tiling) {
    auto j = polygon_json(regular_polygon_geometry(tiling.spec));
    j["q"] = tiling.q;
    j["depth"] = tiling.depth;
    auto tiles = nlohmann::ordered_json::array();
    for (const auto& t : tiling.tiles) {
        nlohmann::ordered_json tj;
        tj["generation"] = t.generation;
        tj["key"] = {t.key.x, t.key.y};
        tj["center"] = point_json(t.center);
        tj["vertices"] = points_json(t.vertices);
        tiles.push_back(std::move(tj));
    }
    j["tiles"] = std::move(tiles);
    return j.dump(2) + "\n";
}

std::string export_json(const Triangle& triangle) {
    nlohmann::ordered_json j;
    j["a"] = sig9(triangle.a);
    j["b"] = sig9(triangle.b);
    j["c"] = sig9(triangle.c);
    j["alpha"] = sig9(triangle.alpha);
    j["beta"] = sig9(triangle.beta);
    j["gamma"] = sig9(triangle.gamma);
    j["defect"] = sig9(kPi - triangle.alpha - triangle.beta - triangle.gamma);
    return j.dump(2) + "\n";
}

}  // namespace hyptile
