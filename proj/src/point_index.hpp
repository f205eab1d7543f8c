#pragma once

#include "hyptile/disk_model.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

namespace hyptile::detail {

/// Finds previously inserted model points near a query point. Points are
/// bucketed on a 1e-7 grid; a match must lie in the query's cell or a
/// neighbouring one and closer than `relative_tolerance * (1 - |z|^2)`,
/// which scales with the local size of hyperbolic features.
class PointIndex {
public:
    using Cell = std::pair<std::int64_t, std::int64_t>;

    explicit PointIndex(double relative_tolerance = 1e-3) : tolerance_(relative_tolerance) {}

    static Cell cell_of(Vec2 v) {
        return {std::llround(v.x * 1e7), std::llround(v.y * 1e7)};
    }

    std::optional<std::size_t> find(Vec2 v) const {
        const Cell c = cell_of(v);
        const double limit = tolerance_ * (1.0 - v.sq_norm());
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                const auto it = cells_.find({c.first + dx, c.second + dy});
                if (it != cells_.end() && (it->second.first - v).norm() < limit) {
                    return it->second.second;
                }
            }
        }
        return std::nullopt;
    }

    /// Inserts v with the given id unless a match exists; returns the id of
    /// the stored point.
    std::size_t insert(Vec2 v, std::size_t id) {
        if (auto hit = find(v)) {
            return *hit;
        }
        cells_.emplace(cell_of(v), std::make_pair(v, id));
        return id;
    }

private:
    double tolerance_;
    std::map<Cell, std::pair<Vec2, std::size_t>> cells_;
};

}  // namespace hyptile::detail
