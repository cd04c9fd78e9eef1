#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "tam/geometry.hpp"

namespace tam {

// A glue is a colour string over an arbitrary alphabet plus a nonnegative
// strength. The empty colour with strength 0 is the null side.
struct Glue {
    std::string color;
    std::uint32_t strength = 0;

    bool is_null() const { return strength == 0 && color.empty(); }
    friend bool operator==(const Glue& a, const Glue& b) {
        return a.strength == b.strength && a.color == b.color;
    }
    friend bool operator!=(const Glue& a, const Glue& b) { return !(a == b); }
};

inline Glue null_glue() { return Glue{}; }

// Unit square with one glue per side; equality within a tile set is by
// index, not structure.
struct TileType {
    std::string name;
    std::array<Glue, 4> sides;  // indexed by Dir

    const Glue& side(Dir d) const { return sides[static_cast<std::size_t>(d)]; }
    Glue& side(Dir d) { return sides[static_cast<std::size_t>(d)]; }
};

inline TileType make_tile(std::string name, Glue n, Glue e, Glue s, Glue w) {
    TileType t;
    t.name = std::move(name);
    t.side(Dir::North) = std::move(n);
    t.side(Dir::East) = std::move(e);
    t.side(Dir::South) = std::move(s);
    t.side(Dir::West) = std::move(w);
    return t;
}

using TileIndex = std::uint32_t;

// Two facing sides bind with the common strength iff colour and strength
// both agree; a matched strength-0 pair contributes nothing.
inline std::uint32_t bond_strength(const TileType& t, const TileType& t2, Dir u) {
    const Glue& a = t.side(u);
    const Glue& b = t2.side(opposite(u));
    if (a == b) return a.strength;
    return 0;
}

class TileSet {
public:
    TileIndex add(TileType t) {
        if (by_name_.count(t.name)) throw std::invalid_argument("duplicate tile name: " + t.name);
        TileIndex idx = static_cast<TileIndex>(types_.size());
        by_name_.emplace(t.name, idx);
        types_.push_back(std::move(t));
        index_dirty_ = true;
        return idx;
    }

    const TileType& operator[](TileIndex i) const { return types_.at(i); }
    std::size_t size() const { return types_.size(); }
    bool empty() const { return types_.empty(); }
    const std::vector<TileType>& types() const { return types_; }

    std::optional<TileIndex> find(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) return std::nullopt;
        return it->second;
    }

    void set_marker_class(const std::string& cls, std::vector<TileIndex> members) {
        for (TileIndex i : members)
            if (i >= types_.size()) throw std::out_of_range("marker index out of range");
        markers_[cls] = std::move(members);
    }

    void add_marker(const std::string& cls, TileIndex i) {
        if (i >= types_.size()) throw std::out_of_range("marker index out of range");
        markers_[cls].push_back(i);
    }

    const std::map<std::string, std::vector<TileIndex>>& marker_classes() const { return markers_; }

    bool is_marked(const std::string& cls, TileIndex i) const {
        auto it = markers_.find(cls);
        if (it == markers_.end()) return false;
        for (TileIndex m : it->second)
            if (m == i) return true;
        return false;
    }

    // Structural duplicates are permitted; callers may surface this as a lint.
    std::vector<std::pair<TileIndex, TileIndex>> structural_duplicates() const {
        std::vector<std::pair<TileIndex, TileIndex>> dups;
        for (std::size_t i = 0; i < types_.size(); ++i)
            for (std::size_t j = i + 1; j < types_.size(); ++j) {
                bool same = true;
                for (Dir d : kDirs)
                    if (types_[i].side(d) != types_[j].side(d)) same = false;
                if (same) dups.emplace_back(static_cast<TileIndex>(i), static_cast<TileIndex>(j));
            }
        return dups;
    }

    // Tiles whose `d` side carries exactly this glue. Used by the frontier
    // engine to avoid scanning the whole set per site.
    const std::vector<TileIndex>& candidates(Dir d, const Glue& g) const {
        rebuild_index();
        auto it = index_[static_cast<std::size_t>(d)].find(key(g));
        static const std::vector<TileIndex> kEmpty;
        return it == index_[static_cast<std::size_t>(d)].end() ? kEmpty : it->second;
    }

private:
    static std::string key(const Glue& g) { return std::to_string(g.strength) + "|" + g.color; }

    void rebuild_index() const {
        if (!index_dirty_) return;
        for (auto& m : index_) m.clear();
        for (std::size_t i = 0; i < types_.size(); ++i)
            for (Dir d : kDirs) {
                const Glue& g = types_[i].side(d);
                if (g.strength > 0)
                    index_[static_cast<std::size_t>(d)][key(g)].push_back(
                        static_cast<TileIndex>(i));
            }
        index_dirty_ = false;
    }

    std::vector<TileType> types_;
    std::unordered_map<std::string, TileIndex> by_name_;
    std::map<std::string, std::vector<TileIndex>> markers_;
    mutable std::array<std::unordered_map<std::string, std::vector<TileIndex>>, 4> index_;
    mutable bool index_dirty_ = true;
};

// Text (JSON) tileset format:
//   { "tiles": [ { "name": str, "north": [color, strength], ... } ],
//     "markers": { "black": [names...] } }
TileSet parse_tileset_json(const std::string& text);
std::string tileset_to_json(const TileSet& ts);

}  // namespace tam
