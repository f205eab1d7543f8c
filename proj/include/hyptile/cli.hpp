#pragma once

#include "hyptile/errors.hpp"
#include "hyptile/polygon.hpp"
#include "hyptile/render.hpp"
#include "hyptile/tiling.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace hyptile::cli {

enum class Format { Svg, Json };

struct TriangleRequest {
    enum class Mode { Angles, Sides, Right };
    Mode mode = Mode::Angles;
    std::array<double, 3> values{};   // Right uses values[0] = alpha, values[1] = gamma
};

struct PolygonRequest {
    RegularPolygonSpec spec;
};

struct TilingRequest {
    RegularPolygonSpec spec;
    int depth = 2;
    TilingOptions options;
    bool dedup_edges = true;
};

/// A fully validated invocation: one subcommand with resolved parameters.
struct CommandPlan {
    std::variant<TriangleRequest, PolygonRequest, TilingRequest> request;
    Format format = Format::Svg;
    std::string out_path;   // empty or "-" means standard output
    RenderOptions render;
    SceneStyle style;
};

/// Thrown for malformed command lines and configuration files.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Thrown by plan() for --help; carries the text to print.
struct HelpRequested {
    std::string text;
};

/// Parses the arguments (without the program name) into a validated plan.
CommandPlan plan(const std::vector<std::string>& args);

/// Executes a plan and returns the rendered document.
std::string execute(const CommandPlan& plan);

/// Entry point: 0 on success, 1 on domain errors, 2 on usage errors. Every
/// failure prints exactly one diagnostic line to `err` and writes no file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyptile::cli
