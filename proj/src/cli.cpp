#include "hyptile/cli.hpp"

#include "hyptile/angle_expr.hpp"
#include "hyptile/hyp_trig.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <unistd.h>

namespace hyptile::cli {

namespace {

struct RawArgs {
    std::string format = "svg";
    std::string out;
    std::string config;
    std::optional<int> size_px;
    std::optional<int> precision;
    std::optional<double> stroke;

    std::vector<std::string> angles;
    std::vector<std::string> lengths;
    bool right = false;
    std::string alpha;
    std::string gamma;

    int sides = 8;
    std::string half_angle;
    bool show_vertices = false;
    bool show_midpoints = false;

    int depth = 2;
    int max_depth = TilingOptions{}.max_depth;
    bool no_edge_dedup = false;
};

void add_output_options(CLI::App& cmd, RawArgs& raw) {
    cmd.add_option("--format", raw.format, "Output format")->check(CLI::IsMember({"svg", "json"}));
    cmd.add_option("--out", raw.out, "Output path (default: standard output)");
    cmd.add_option("--config", raw.config, "JSON file with default style options");
    cmd.add_option("--size", raw.size_px, "SVG width and height in pixels");
    cmd.add_option("--precision", raw.precision, "Decimals printed in SVG coordinates");
    cmd.add_option("--stroke", raw.stroke, "Stroke width multiplier");
}

/// Angle argument: malformed text is a usage error, out-of-range values
/// propagate as DomainError.
double angle_arg(const std::string& text, const char* flag) {
    try {
        return parse_angle(text).radians;
    } catch (const ParseError& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

double length_arg(const std::string& text) {
    try {
        return parse_real(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("--sides: ") + e.what());
    }
}

void apply_config(const std::string& path, RenderOptions& render, SceneStyle& style) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read config file " + path);
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("malformed config file " + path + ": " + e.what());
    }
    if (!j.is_object()) {
        throw UsageError("config file " + path + " must hold a JSON object");
    }
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "size_px") render.size_px = value.get<int>();
            else if (key == "margin") render.margin = value.get<double>();
            else if (key == "stroke") render.stroke = value.get<double>();
            else if (key == "precision") render.precision = value.get<int>();
            else if (key == "edge_color") style.edge.color = value.get<std::string>();
            else if (key == "edge_width") style.edge.stroke_width = value.get<double>();
            else if (key == "absolute_color") style.absolute.color = value.get<std::string>();
            else if (key == "absolute_width") style.absolute.stroke_width = value.get<double>();
            else if (key == "vertex_color") style.vertex.color = value.get<std::string>();
            else if (key == "midpoint_color") style.midpoint.color = value.get<std::string>();
            else if (key == "show_vertices") style.show_vertices = value.get<bool>();
            else if (key == "show_midpoints") style.show_midpoints = value.get<bool>();
            else throw UsageError("unknown config key '" + key + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("config file " + path + ": " + e.what());
    }
}

std::string single_line(std::string text) {
    std::replace(text.begin(), text.end(), '\n', ' ');
    while (!text.empty() && text.back() == ' ') {
        text.pop_back();
    }
    return text;
}

bool use_color(const std::ostream& err) {
    return std::getenv("HYPTILE_NO_COLOR") == nullptr && &err == &std::cerr &&
           ::isatty(STDERR_FILENO) != 0;
}

void write_atomically(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        out << content;
        out.flush();
        if (!out) {
            out.close();
            fs::remove(tmp);
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot write " + path + ": " + ec.message());
    }
}

}  // namespace

CommandPlan plan(const std::vector<std::string>& args) {
    RawArgs raw;
    CLI::App app{"Poincare disk toolkit: hyperbolic triangles, regular polygons and tilings",
                 "hyptile"};
    app.require_subcommand(1, 1);

    auto* tri = app.add_subcommand("solve-triangle", "Solve a hyperbolic triangle");
    tri->add_option("--angles", raw.angles, "Angles alpha beta gamma")->expected(3);
    tri->add_option("--sides", raw.lengths, "Sides a b c")->expected(3);
    tri->add_flag("--right", raw.right, "Right triangle (beta = pi/2) from --alpha and --gamma");
    tri->add_option("--alpha", raw.alpha, "Acute angle alpha");
    tri->add_option("--gamma", raw.gamma, "Acute angle gamma");
    add_output_options(*tri, raw);

    auto* poly = app.add_subcommand("polygon", "Regular polygon centred at the origin");
    poly->add_option("--sides", raw.sides, "Number of sides")->check(CLI::Range(3, 1000));
    poly->add_option("--half-angle", raw.half_angle, "Half of the interior angle")->required();
    poly->add_flag("--show-vertices", raw.show_vertices, "Mark vertices");
    poly->add_flag("--show-midpoints", raw.show_midpoints, "Mark edge midpoints");
    add_output_options(*poly, raw);

    auto* til = app.add_subcommand("tiling", "Tiling by reflections of a regular polygon");
    til->add_option("--sides", raw.sides, "Number of sides")->check(CLI::Range(3, 1000));
    til->add_option("--half-angle", raw.half_angle, "Half of the interior angle")->required();
    til->add_option("--depth", raw.depth, "Reflection depth")->check(CLI::NonNegativeNumber);
    til->add_option("--max-depth", raw.max_depth, "Upper bound accepted for --depth")
        ->check(CLI::NonNegativeNumber);
    til->add_flag("--no-edge-dedup", raw.no_edge_dedup, "Draw shared edges once per tile");
    til->add_flag("--show-vertices", raw.show_vertices, "Mark vertices");
    add_output_options(*til, raw);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            throw HelpRequested{app.help()};
        }
        throw UsageError(single_line(e.what()));
    }

    CommandPlan result;
    result.format = raw.format == "json" ? Format::Json : Format::Svg;
    result.out_path = raw.out;
    if (!raw.config.empty()) {
        apply_config(raw.config, result.render, result.style);
    }
    if (raw.size_px) result.render.size_px = *raw.size_px;
    if (raw.precision) result.render.precision = *raw.precision;
    if (raw.stroke) result.render.stroke = *raw.stroke;
    result.style.show_vertices = result.style.show_vertices || raw.show_vertices;
    result.style.show_midpoints = result.style.show_midpoints || raw.show_midpoints;

    if (tri->parsed()) {
        const int modes = int(!raw.angles.empty()) + int(!raw.lengths.empty()) + int(raw.right);
        if (modes != 1) {
            throw UsageError("solve-triangle needs exactly one of --angles, --sides, --right");
        }
        TriangleRequest req;
        if (raw.right) {
            if (raw.alpha.empty() || raw.gamma.empty()) {
                throw UsageError("--right requires --alpha and --gamma");
            }
            req.mode = TriangleRequest::Mode::Right;
            req.values = {angle_arg(raw.alpha, "--alpha"), angle_arg(raw.gamma, "--gamma"), 0.0};
        } else if (!raw.alpha.empty() || !raw.gamma.empty()) {
            throw UsageError("--alpha and --gamma are only valid with --right");
        } else if (!raw.angles.empty()) {
            req.mode = TriangleRequest::Mode::Angles;
            for (std::size_t i = 0; i < 3; ++i) {
                req.values[i] = angle_arg(raw.angles[i], "--angles");
            }
        } else {
            req.mode = TriangleRequest::Mode::Sides;
            for (std::size_t i = 0; i < 3; ++i) {
                req.values[i] = length_arg(raw.lengths[i]);
            }
        }
        result.request = req;
    } else {
        const RegularPolygonSpec spec{raw.sides, angle_arg(raw.half_angle, "--half-angle")};
        if (poly->parsed()) {
            result.request = PolygonRequest{spec};
        } else {
            TilingRequest req;
            req.spec = spec;
            req.depth = raw.depth;
            req.options.max_depth = raw.max_depth;
            req.dedup_edges = !raw.no_edge_dedup;
            result.request = req;
        }
    }
    return result;
}

std::string execute(const CommandPlan& plan) {
    const bool json = plan.format == Format::Json;
    if (const auto* tri = std::get_if<TriangleRequest>(&plan.request)) {
        const auto& v = tri->values;
        Triangle t;
        switch (tri->mode) {
            case TriangleRequest::Mode::Angles: t = solve_from_angles(v[0], v[1], v[2]); break;
            case TriangleRequest::Mode::Sides: t = solve_from_sides(v[0], v[1], v[2]); break;
            case TriangleRequest::Mode::Right: t = right_triangle_solve(v[0], v[1]); break;
        }
        return json ? export_json(t) : render_svg(triangle_scene(t, plan.style), plan.render);
    }
    if (const auto* poly = std::get_if<PolygonRequest>(&plan.request)) {
        const auto geometry = regular_polygon_geometry(poly->spec);
        return json ? export_json(geometry)
                    : render_svg(polygon_scene(geometry, plan.style), plan.render);
    }
    const auto& til = std::get<TilingRequest>(plan.request);
    const auto tiling = generate_tiling(til.spec, til.depth, til.options);
    return json ? export_json(tiling)
                : render_svg(tiling_scene(tiling, til.dedup_edges, plan.style), plan.render);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const bool color = use_color(err);
    auto fail = [&](int code, const std::string& message) {
        err << "hyptile: " << (color ? "\x1b[31merror\x1b[0m" : "error") << ": "
            << single_line(message) << "\n";
        return code;
    };
    try {
        const CommandPlan p = plan(args);
        const std::string document = execute(p);
        if (p.out_path.empty() || p.out_path == "-") {
            out << document;
        } else {
            write_atomically(p.out_path, document);
        }
        return 0;
    } catch (const HelpRequested& help) {
        out << help.text;
        return 0;
    } catch (const UsageError& e) {
        return fail(2, e.what());
    } catch (const std::exception& e) {
        return fail(1, e.what());
    }
}

}  // namespace hyptile::cli
