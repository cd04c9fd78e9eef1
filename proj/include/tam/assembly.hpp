#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "tam/geometry.hpp"
#include "tam/tiles.hpp"

namespace tam {

// Partial map from lattice points to tile-type indices. Placements are
// append-only: a point, once set, never changes or clears.
class Assembly {
public:
    struct Placement {
        Point pos;
        TileIndex tile;
    };

    Assembly() = default;

    bool occupied(const Point& p) const { return map_.count(p) != 0; }

    std::optional<TileIndex> at(const Point& p) const {
        auto it = map_.find(p);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void place(const Point& p, TileIndex t) {
        auto [it, fresh] = map_.emplace(p, t);
        if (!fresh) throw std::logic_error("placement collision at " + to_string(p));
        history_.push_back({p, t});
    }

    std::size_t size() const { return map_.size(); }
    bool empty() const { return map_.empty(); }

    const std::unordered_map<Point, TileIndex, PointHash>& placements() const { return map_; }
    // Placement order; for seeds this is construction order.
    const std::vector<Placement>& history() const { return history_; }

    std::vector<Point> domain() const {
        std::vector<Point> pts;
        pts.reserve(map_.size());
        for (const auto& [p, t] : map_) pts.push_back(p);
        return pts;
    }

    Window bounding_box() const {
        if (map_.empty()) return Window{{0, 0}, {-1, -1}};
        Window w{{INT64_MAX, INT64_MAX}, {INT64_MIN, INT64_MIN}};
        for (const auto& [p, t] : map_) {
            w.lo.x = std::min(w.lo.x, p.x);
            w.lo.y = std::min(w.lo.y, p.y);
            w.hi.x = std::max(w.hi.x, p.x);
            w.hi.y = std::max(w.hi.y, p.y);
        }
        return w;
    }

    friend bool operator==(const Assembly& a, const Assembly& b) { return a.map_ == b.map_; }

private:
    std::unordered_map<Point, TileIndex, PointHash> map_;
    std::vector<Placement> history_;
};

// Sum of bond strengths between a hypothetical tile at p and its occupied
// neighbours. p must be unoccupied.
std::uint32_t attachment_strength(const Assembly& a, const TileSet& ts, const Point& p,
                                  const TileType& t);

struct TileAssemblySystem {
    TileSet tiles;
    Assembly seed;
    std::uint32_t temperature = 2;
};

// Assembly snapshot format: one line per placement "x y tile_name", in
// placement order.
std::string snapshot(const Assembly& a, const TileSet& ts);
Assembly parse_snapshot(const std::string& text, const TileSet& ts);

}  // namespace tam
