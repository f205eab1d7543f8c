#include "hyptile/errors.hpp"
#include "hyptile/render.hpp"

#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <random>
#include <regex>
#include <string>

using namespace hyptile;
using hyptile::testing::kPi;
using doctest::Approx;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

double ccw(double from, double to) {
    double d = std::fmod(to - from, 2 * kPi);
    return d < 0 ? d + 2 * kPi : d;
}

/// True when `pt` lies on the drawn part of the arc (to `tol`).
bool arc_contains(const GeodesicArc& arc, Vec2 pt, double tol) {
    const Vec2 c = arc.circle.center;
    if (std::abs((pt - c).norm() - arc.circle.radius) > tol) {
        return false;
    }
    auto ang = [&](Vec2 v) { return std::atan2(v.y - c.y, v.x - c.x); };
    const double off = arc.counterclockwise ? ccw(ang(arc.from), ang(pt)) : ccw(ang(pt), ang(arc.from));
    return off <= arc.sweep;
}

}  // namespace

TEST_CASE("circle_through") {
    const auto unit = circle_through({1, 0}, {0, 1}, {-1, 0});
    CHECK(std::abs(unit.center.x) < 1e-15);
    CHECK(std::abs(unit.center.y) < 1e-15);
    CHECK(unit.radius == Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(circle_through({0, 0}, {1, 1}, {2, 2}), Collinear);
    CHECK_THROWS_AS(circle_through({0.1, 0.2}, {0.1, 0.2}, {0.5, 0.3}), Collinear);

    std::mt19937_64 rng(31);
    for (int i = 0; i < 2000; ++i) {
        const Vec2 a{testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1)};
        const Vec2 b{testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1)};
        const Vec2 c{testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1)};
        if (std::abs((b - a).cross(c - a)) < 1e-3) {
            continue;
        }
        const auto circle = circle_through(a, b, c);
        const double tol = 1e-10 * std::max(1.0, circle.radius);
        REQUIRE(std::abs((a - circle.center).norm() - circle.radius) < tol);
        REQUIRE(std::abs((b - circle.center).norm() - circle.radius) < tol);
        REQUIRE(std::abs((c - circle.center).norm() - circle.radius) < tol);
    }
}

TEST_CASE("octagon edge circles are orthogonal to the absolute") {
    const auto g = regular_polygon_geometry({8, kPi / 3});
    for (int i = 0; i < 8; ++i) {
        const HPoint& p = g.vertices[i];
        const HPoint& q = g.vertices[(i + 1) % 8];
        const auto circle = circle_through(p.vec(), g.midpoints[i].vec(), q.vec());
        CHECK(std::abs(circle.center.sq_norm() - circle.radius * circle.radius - 1.0) < 1e-9);
        const auto& arc = std::get<Arc>(geodesic_through(p, q));
        CHECK(std::abs(arc.center.x - circle.center.x) < 1e-9);
        CHECK(std::abs(arc.center.y - circle.center.y) < 1e-9);
        CHECK(std::abs(arc.radius - circle.radius) < 1e-9);
    }
}

TEST_CASE("edge_arc") {
    const auto g = regular_polygon_geometry({8, kPi / 4});
    const Shape s = edge_arc(g.vertices[0], g.midpoints[0], g.vertices[1]);
    REQUIRE(std::holds_alternative<GeodesicArc>(s));
    const auto& arc = std::get<GeodesicArc>(s);
    CHECK(std::abs(g.midpoints[0].x() - 0.504081) < 1e-6);
    CHECK(std::abs(g.midpoints[0].y() - 0.208797) < 1e-6);
    CHECK(arc_contains(arc, g.midpoints[0].vec(), 1e-6));
    CHECK(arc.sweep < kPi);

    // Reversing the endpoints flips the sweep direction only.
    const auto rev = std::get<GeodesicArc>(edge_arc(g.vertices[1], g.midpoints[0], g.vertices[0]));
    CHECK(rev.counterclockwise != arc.counterclockwise);
    CHECK(rev.sweep == Approx(arc.sweep).epsilon(1e-12));

    // Mirror-symmetric edge: the circle centre sits on the x-axis.
    const HPoint p(0.3, 0.2), q(0.3, -0.2);
    const auto sym = std::get<GeodesicArc>(edge_arc(p, midpoint(p, q), q));
    CHECK(std::abs(sym.circle.center.y) < 1e-12);
    CHECK(arc_contains(sym, midpoint(p, q).vec(), 1e-9));
    CHECK(std::abs(midpoint(p, q).y()) < 1e-15);

    const Shape seg = edge_arc(HPoint(0.1, 0.1), HPoint(0.2, 0.2), HPoint(0.4, 0.4));
    CHECK(std::holds_alternative<Segment>(seg));

    CHECK_THROWS_AS(edge_arc(p, p, q), DegenerateInput);
}

TEST_CASE("polygon and tiling arcs pass through their midpoints") {
    const auto tiling = generate_tiling({8, kPi / 3}, 2);
    for (const auto& tile : tiling.tiles) {
        for (int i = 0; i < 8; ++i) {
            const HPoint& a = tile.vertices[i];
            const HPoint& b = tile.vertices[(i + 1) % 8];
            const HPoint m = midpoint(a, b);
            const Shape s = edge_arc(a, m, b);
            if (const auto* arc = std::get_if<GeodesicArc>(&s)) {
                REQUIRE(arc_contains(*arc, m.vec(), 1e-6));
                REQUIRE(std::abs(arc->circle.center.sq_norm() -
                                 arc->circle.radius * arc->circle.radius - 1.0) < 1e-6);
            }
        }
    }
}

TEST_CASE("render_svg structure") {
    const std::string empty = render_svg(Scene{});
    CHECK(count(empty, "<circle") == 1);
    CHECK(count(empty, "class=\"absolute\"") == 1);
    CHECK(count(empty, "class=\"edge\"") == 0);
    CHECK(empty.rfind("</svg>\n") == empty.size() - 7);

    const auto octagon = render_svg(polygon_scene(regular_polygon_geometry({8, kPi / 3})));
    CHECK(count(octagon, "class=\"edge\"") == 8);
    CHECK(count(octagon, "class=\"absolute\"") == 1);

    SceneStyle dots;
    dots.show_vertices = true;
    dots.show_midpoints = true;
    const auto marked = render_svg(polygon_scene(regular_polygon_geometry({8, kPi / 3}), dots));
    CHECK(count(marked, "class=\"dot\"") == 16);

    CHECK_THROWS_AS(render_svg(Scene{}, RenderOptions{0}), DomainError);
    CHECK_THROWS_AS(render_svg(Scene{}, RenderOptions{-5}), DomainError);
}

TEST_CASE("render_svg maps the model square onto the viewport") {
    Scene scene;
    scene.add(Segment{{-1, -1}, {1, 1}});
    RenderOptions opt;
    opt.size_px = 200;
    opt.margin = 0;
    opt.precision = 1;
    const auto svg = render_svg(scene, opt);
    // +y is up: model (-1,-1) is the bottom-left pixel corner.
    CHECK(svg.find("x1=\"0.0\" y1=\"200.0\" x2=\"200.0\" y2=\"0.0\"") != std::string::npos);
}

TEST_CASE("tiling scene edge counts") {
    const auto tiling = generate_tiling({8, kPi / 4}, 1);
    const auto all = render_svg(tiling_scene(tiling, false));
    CHECK(count(all, "class=\"edge\"") == 72);
    CHECK(count(all, "<g id=\"tile-") == 9);

    // Oracle: unordered endpoint pairs compared pairwise.
    std::vector<std::pair<Vec2, Vec2>> edges;
    auto same = [](Vec2 a, Vec2 b) { return (a - b).norm() < 1e-9; };
    for (const auto& tile : tiling.tiles) {
        for (int i = 0; i < 8; ++i) {
            const Vec2 a = tile.vertices[i].vec(), b = tile.vertices[(i + 1) % 8].vec();
            const bool seen = std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
                return (same(e.first, a) && same(e.second, b)) || (same(e.first, b) && same(e.second, a));
            });
            if (!seen) {
                edges.emplace_back(a, b);
            }
        }
    }
    const auto dedup = render_svg(tiling_scene(tiling, true));
    CHECK(count(dedup, "class=\"edge\"") == edges.size());
    CHECK(edges.size() == 64);
    CHECK(count(dedup, "<g id=\"tile-") == 9);
}

TEST_CASE("render_svg is deterministic") {
    const auto scene = tiling_scene(generate_tiling({8, kPi / 4}, 2));
    CHECK(render_svg(scene) == render_svg(scene));
}

TEST_CASE("export_json polygon") {
    const auto g = regular_polygon_geometry({8, kPi / 3});
    const std::string text = export_json(g);
    const auto j = nlohmann::json::parse(text);
    CHECK(j["p"] == 8);
    CHECK(std::abs(j["vertices"][0][0].get<double>() - 0.405616) < 1e-6);
    CHECK(j["vertices"][0][1].get<double>() == 0.0);
    for (int i = 0; i < 8; ++i) {
        CHECK(std::abs(j["vertices"][i][0].get<double>() - g.vertices[i].x()) < 1e-9);
        CHECK(std::abs(j["vertices"][i][1].get<double>() - g.vertices[i].y()) < 1e-9);
        CHECK(std::abs(j["midpoints"][i][0].get<double>() - g.midpoints[i].x()) < 1e-9);
        CHECK(std::abs(j["midpoints"][i][1].get<double>() - g.midpoints[i].y()) < 1e-9);
    }
    const char* order[] = {"\"p\"", "\"alpha\"", "\"vertices\"", "\"midpoints\"", "\"circumradius\"",
                           "\"inradius\""};
    std::size_t last = 0;
    for (const char* key : order) {
        const auto pos = text.find(key);
        REQUIRE(pos != std::string::npos);
        CHECK(pos >= last);
        last = pos;
    }
    // Nine significant digits.
    CHECK(text.find("0.405616401") != std::string::npos);
}

TEST_CASE("export_json tiling") {
    const auto zero = nlohmann::json::parse(export_json(generate_tiling({8, kPi / 4}, 0)));
    CHECK(zero["tiles"].size() == 1);
    CHECK(zero["q"] == 4);
    CHECK(zero["depth"] == 0);
    const auto one = nlohmann::json::parse(export_json(generate_tiling({8, kPi / 4}, 1)));
    CHECK(one["tiles"].size() == 9);
    CHECK(one["tiles"][3]["generation"] == 1);
}

TEST_CASE("svg arc flags pick the circle through the edge midpoint") {
    // Reconstructs each arc's centre from its endpoint parameterization
    // (SVG 1.1 implementation notes F.6.5) and checks that Q_i lies on it.
    const auto g = regular_polygon_geometry({8, kPi / 4});
    RenderOptions opt;
    opt.precision = 9;
    const std::string svg = render_svg(polygon_scene(g), opt);
    const std::regex path(R"(d="M (\S+) (\S+) A (\S+) \S+ 0 (\d) (\d) (\S+) (\S+)\")");
    const double scale = (opt.size_px - 2 * opt.margin) / 2;
    int i = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), path); it != std::sregex_iterator(); ++it, ++i) {
        const auto& m = *it;
        const double x1 = std::stod(m[1]), y1 = std::stod(m[2]), r = std::stod(m[3]);
        const int large = std::stoi(m[4]), sweep = std::stoi(m[5]);
        const double x2 = std::stod(m[6]), y2 = std::stod(m[7]);
        const double dx = (x1 - x2) / 2, dy = (y1 - y2) / 2;
        const double k = (large == sweep ? -1.0 : 1.0) *
                         std::sqrt(std::max(0.0, (r * r - dx * dx - dy * dy) / (dx * dx + dy * dy)));
        const double cx = k * dy + (x1 + x2) / 2, cy = -k * dx + (y1 + y2) / 2;
        const double qx = opt.margin + (g.midpoints[i].x() + 1) * scale;
        const double qy = opt.margin + (1 - g.midpoints[i].y()) * scale;
        CHECK(std::abs(std::hypot(qx - cx, qy - cy) - r) < 1e-4);
    }
    CHECK(i == 8);
}
