#pragma once

#include "hyptile/disk_model.hpp"
#include "hyptile/polygon.hpp"

#include <cstdint>
#include <vector>

namespace hyptile {

/// Canonical tile identifier: the tile centre rounded to 7 decimals.
struct TileKey {
    std::int64_t x = 0;
    std::int64_t y = 0;

    bool operator==(const TileKey&) const = default;
    auto operator<=>(const TileKey&) const = default;
};

inline constexpr double kKeyScale = 1e7;

TileKey make_key(const HPoint& center);

/// One copy of the base polygon. Vertex i and i+1 bound edge i; a
/// reflection keeps indices, so the orientation alternates by generation.
struct Tile {
    std::vector<HPoint> vertices;
    HPoint center;          // image of the origin
    int generation = 0;
    TileKey key;
};

struct TilingOptions {
    int max_depth = 6;
    /// Tiles whose centre has 1 - |c|^2 below this are not generated; past it
    /// the 7-decimal key can no longer separate neighbouring tiles.
    double min_center_scale = 1e-6;
};

struct Tiling {
    RegularPolygonSpec spec;
    int q = 0;       // tiles meeting at each vertex
    int depth = 0;
    std::vector<Tile> tiles;
};

/// Tile of the base polygon (generation 0, centred at the origin).
Tile base_tile(const PolygonGeometry& geometry);

/// Reflects the tile across the geodesic carrying edge `edge_index`.
/// Throws DomainError for an out-of-range index.
Tile reflect_polygon(const Tile& tile, int edge_index);

/// Number of polygons meeting at a vertex: pi / alpha when integral.
/// Throws TilingMismatch otherwise.
int vertex_valence(const RegularPolygonSpec& spec);

/// Breadth-first closure of edge reflections up to generation `depth`.
Tiling generate_tiling(const RegularPolygonSpec& spec, int depth, const TilingOptions& options = {});

/// Interior angle of the tile at vertex `index`.
double tile_interior_angle(const Tile& tile, int index);

}  // namespace hyptile
