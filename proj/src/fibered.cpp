#include <algorithm>
#include <queue>
#include <unordered_map>

#include "tam/compilers.hpp"

namespace tam {

// Desk-scale realization: a directed spanning-tree system whose terminal
// assembly is exactly fiber(g, stages). Each point gets one tile bound to
// its BFS parent by a strength-2 glue unique to the edge, so every addition
// is a single stable step and the system is trivially directed. The banded
// counter machinery of the general construction is out of scope; the
// window cap (bounding box of the chosen stage) is recorded in the layout.
CompiledSystem compile_fibered_fractal(const GeneratorSet& g, unsigned stages) {
    std::vector<Point> pts = fiber(g, stages);  // throws if not nice
    std::unordered_map<Point, std::size_t, PointHash> index;
    for (std::size_t i = 0; i < pts.size(); ++i) index.emplace(pts[i], i);

    // BFS tree from the band corner
    std::vector<std::int32_t> parent_dir(pts.size(), -1);  // Dir towards parent
    std::vector<char> seen(pts.size(), 0);
    std::queue<std::size_t> q;
    std::size_t root = index.at({0, 0});
    seen[root] = 1;
    q.push(root);
    while (!q.empty()) {
        std::size_t v = q.front();
        q.pop();
        for (Dir d : kDirs) {
            auto it = index.find(neighbor(pts[v], d));
            if (it == index.end() || seen[it->second]) continue;
            seen[it->second] = 1;
            parent_dir[it->second] = static_cast<std::int32_t>(opposite(d));
            q.push(it->second);
        }
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (!seen[i]) throw std::logic_error("fibered: fiber set not connected");

    CompiledSystem cs;
    TileSet& T = cs.system.tiles;
    auto edge_glue = [&](const Point& child) {
        return Glue{"ft:" + std::to_string(child.x) + ":" + std::to_string(child.y), 2};
    };

    std::vector<TileIndex> tiles(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        TileType t;
        t.name = "f:" + std::to_string(pts[i].x) + ":" + std::to_string(pts[i].y);
        for (Dir d : kDirs) {
            Point nb = neighbor(pts[i], d);
            auto it = index.find(nb);
            if (it == index.end()) continue;
            bool to_parent = parent_dir[i] == static_cast<std::int32_t>(d);
            bool from_child =
                parent_dir[it->second] == static_cast<std::int32_t>(opposite(d));
            if (to_parent)
                t.side(d) = edge_glue(pts[i]);
            else if (from_child)
                t.side(d) = edge_glue(nb);
            // non-tree adjacencies stay null: bonds only along the tree
        }
        tiles[i] = T.add(std::move(t));
    }
    cs.system.seed.place(pts[root], tiles[root]);
    cs.system.temperature = 2;
    FiberGeometry geo = fiber_geometry(g, stages);
    cs.note("domain", "fiber(g," + std::to_string(stages) + ") exactly");
    cs.params["stages"] = static_cast<std::int64_t>(stages);
    cs.params["extent"] = geo.size;
    cs.params["band_width"] = geo.band_width;
    return cs;
}

}  // namespace tam
