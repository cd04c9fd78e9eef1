#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tam/assembly.hpp"
#include "tam/geometry.hpp"
#include "tam/tiles.hpp"

namespace tam {

// Weighted grid graph over a set of occupied points; edges only between
// U_2-adjacent points.
struct BindingGraph {
    std::vector<Point> vertices;
    struct Edge {
        std::uint32_t a;
        std::uint32_t b;
        std::uint64_t weight;
    };
    std::vector<Edge> edges;

    bool connected() const;
};

// Full grid graph on a point set: every adjacent pair, unit weights.
BindingGraph full_grid_graph(const std::vector<Point>& points);

// Binding graph of an assembly: edge weights are the bond strengths between
// resident tiles (zero-strength contacts are omitted).
BindingGraph binding_graph(const Assembly& a, const TileSet& ts);

// Global minimum weighted edge cut (Stoer-Wagner). Graph must have >= 2
// vertices and be connected.
std::uint64_t min_cut_stoer_wagner(const BindingGraph& g);

// tau-stability: singletons and the empty assembly are stable; disconnected
// binding graphs are unstable; otherwise the min cut must reach tau.
bool is_tau_stable(const Assembly& a, const TileSet& ts, std::uint32_t tau);

}  // namespace tam
