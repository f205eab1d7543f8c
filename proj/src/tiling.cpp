#include "hyptile/tiling.hpp"

#include "hyptile/errors.hpp"
#include "point_index.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hyptile {

TileKey make_key(const HPoint& center) {
    return {std::llround(center.x() * kKeyScale), std::llround(center.y() * kKeyScale)};
}

Tile base_tile(const PolygonGeometry& geometry) {
    Tile t;
    t.vertices = geometry.vertices;
    t.center = HPoint(0.0, 0.0);
    t.generation = 0;
    t.key = make_key(t.center);
    return t;
}

Tile reflect_polygon(const Tile& tile, int edge_index) {
    const int p = static_cast<int>(tile.vertices.size());
    if (edge_index < 0 || edge_index >= p) {
        throw DomainError("reflect_polygon: edge index " + std::to_string(edge_index) +
                          " out of range");
    }
    const HPoint& from = tile.vertices[edge_index];
    const HPoint& to = tile.vertices[(edge_index + 1) % p];

    Tile out;
    out.vertices.reserve(p);
    for (int i = 0; i < p; ++i) {
        // Edge endpoints are fixed points; copy them so shared edges match exactly.
        if (i == edge_index || i == (edge_index + 1) % p) {
            out.vertices.push_back(tile.vertices[i]);
        } else {
            out.vertices.push_back(reflect_across(tile.vertices[i], from, to));
        }
    }
    out.center = reflect_across(tile.center, from, to);
    out.generation = tile.generation + 1;
    out.key = make_key(out.center);
    return out;
}

int vertex_valence(const RegularPolygonSpec& spec) {
    const double q = std::numbers::pi / spec.half_angle;
    const double rounded = std::round(q);
    if (std::abs(q - rounded) > 1e-9 || rounded < 3) {
        throw TilingMismatch("tiling mismatch: 2*pi is not an integer multiple (>= 3) of the "
                             "interior angle");
    }
    return static_cast<int>(rounded);
}

Tiling generate_tiling(const RegularPolygonSpec& spec, int depth, const TilingOptions& options) {
    const PolygonGeometry base = regular_polygon_geometry(spec);
    const int q = vertex_valence(spec);
    if (depth < 0 || depth > options.max_depth) {
        throw DomainError("generate_tiling: depth must lie in [0, " +
                          std::to_string(options.max_depth) + "]");
    }

    Tiling tiling;
    tiling.spec = spec;
    tiling.q = q;
    tiling.depth = depth;
    tiling.tiles.push_back(base_tile(base));

    detail::PointIndex centers;
    centers.insert(tiling.tiles.front().center.vec(), 0);

    std::size_t frontier_begin = 0;
    for (int gen = 0; gen < depth; ++gen) {
        const std::size_t frontier_end = tiling.tiles.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (int e = 0; e < spec.sides; ++e) {
                Tile next = reflect_polygon(tiling.tiles[i], e);
                if (1.0 - next.center.sq_norm() < options.min_center_scale ||
                    centers.find(next.center.vec())) {
                    continue;
                }
                centers.insert(next.center.vec(), tiling.tiles.size());
                tiling.tiles.push_back(std::move(next));
            }
        }
        frontier_begin = frontier_end;
    }
    return tiling;
}

double tile_interior_angle(const Tile& tile, int index) {
    const int p = static_cast<int>(tile.vertices.size());
    const HPoint& v = tile.vertices.at(index);
    const HPoint& next = tile.vertices[(index + 1) % p];
    const HPoint& prev = tile.vertices[(index + p - 1) % p];
    return angle_at(v, geodesic_through(v, next), geodesic_through(v, prev));
}

}  // namespace hyptile
