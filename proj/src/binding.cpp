#include "tam/binding.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace tam {

std::uint32_t attachment_strength(const Assembly& a, const TileSet& ts, const Point& p,
                                  const TileType& t) {
    if (a.occupied(p)) throw std::logic_error("attachment_strength: point occupied");
    std::uint32_t total = 0;
    for (Dir d : kDirs) {
        auto q = a.at(neighbor(p, d));
        if (q) total += bond_strength(t, ts[*q], d);
    }
    return total;
}

bool BindingGraph::connected() const {
    if (vertices.empty()) return true;
    std::vector<std::vector<std::uint32_t>> adj(vertices.size());
    for (const auto& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    std::vector<char> seen(vertices.size(), 0);
    std::queue<std::uint32_t> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (auto w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == vertices.size();
}

BindingGraph full_grid_graph(const std::vector<Point>& points) {
    BindingGraph g;
    g.vertices = points;
    std::unordered_map<Point, std::uint32_t, PointHash> index;
    for (std::uint32_t i = 0; i < points.size(); ++i) index.emplace(points[i], i);
    for (std::uint32_t i = 0; i < points.size(); ++i) {
        for (Dir d : {Dir::East, Dir::North}) {  // one direction per unordered pair
            auto it = index.find(neighbor(points[i], d));
            if (it != index.end()) g.edges.push_back({i, it->second, 1});
        }
    }
    return g;
}

BindingGraph binding_graph(const Assembly& a, const TileSet& ts) {
    BindingGraph g;
    std::unordered_map<Point, std::uint32_t, PointHash> index;
    g.vertices.reserve(a.size());
    for (const auto& [p, t] : a.placements()) {
        index.emplace(p, static_cast<std::uint32_t>(g.vertices.size()));
        g.vertices.push_back(p);
    }
    for (const auto& [p, t] : a.placements()) {
        for (Dir d : {Dir::East, Dir::North}) {
            auto it = index.find(neighbor(p, d));
            if (it == index.end()) continue;
            std::uint32_t w = bond_strength(ts[t], ts[*a.at(neighbor(p, d))], d);
            if (w > 0) g.edges.push_back({index.at(p), it->second, w});
        }
    }
    return g;
}

std::uint64_t min_cut_stoer_wagner(const BindingGraph& g) {
    const std::size_t n = g.vertices.size();
    if (n < 2) throw std::invalid_argument("min cut needs >= 2 vertices");
    // dense weight matrix; binding graphs at desk scale are small
    std::vector<std::vector<std::uint64_t>> w(n, std::vector<std::uint64_t>(n, 0));
    for (const auto& e : g.edges) {
        w[e.a][e.b] += e.weight;
        w[e.b][e.a] += e.weight;
    }
    std::vector<std::uint32_t> active(n);
    for (std::uint32_t i = 0; i < n; ++i) active[i] = i;

    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    while (active.size() > 1) {
        // maximum adjacency ordering
        std::vector<char> added(active.size(), 0);
        std::vector<std::uint64_t> conn(active.size(), 0);
        std::size_t prev = 0, last = 0;
        for (std::size_t it = 0; it < active.size(); ++it) {
            std::size_t pick = SIZE_MAX;
            for (std::size_t i = 0; i < active.size(); ++i)
                if (!added[i] && (pick == SIZE_MAX || conn[i] > conn[pick])) pick = i;
            added[pick] = 1;
            if (it == active.size() - 1) {
                best = std::min(best, conn[pick]);
                prev = last;
                last = pick;
                break;
            }
            prev = last;
            last = pick;
            for (std::size_t i = 0; i < active.size(); ++i)
                if (!added[i]) conn[i] += w[active[pick]][active[i]];
        }
        // merge `last` into `prev`
        std::uint32_t u = active[prev], v = active[last];
        for (std::size_t i = 0; i < active.size(); ++i) {
            w[u][active[i]] += w[v][active[i]];
            w[active[i]][u] = w[u][active[i]];
        }
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(last));
    }
    return best;
}

bool is_tau_stable(const Assembly& a, const TileSet& ts, std::uint32_t tau) {
    if (a.size() <= 1) return true;
    BindingGraph g = binding_graph(a, ts);
    if (!g.connected()) return false;
    return min_cut_stoer_wagner(g) >= tau;
}

}  // namespace tam
