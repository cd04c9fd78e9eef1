#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tam/binding.hpp"
#include "tam/rng.hpp"
#include "tam/tiles.hpp"

using namespace tam;

namespace {

Glue g(const std::string& c, std::uint32_t s) { return {c, s}; }

TileType tile4(const std::string& name, Glue n, Glue e, Glue s, Glue w) {
    return make_tile(name, n, e, s, w);
}

// brute-force oracle: minimum over all bipartitions of the bond weight
// crossing the cut (assemblies of <= 12 tiles)
std::uint64_t brute_min_cut(const Assembly& a, const TileSet& ts) {
    std::vector<Point> pts = a.domain();
    std::sort(pts.begin(), pts.end());
    const std::size_t n = pts.size();
    REQUIRE(n >= 2);
    REQUIRE(n <= 20);
    auto weight = [&](const Point& p, const Point& q) -> std::uint64_t {
        for (Dir d : kDirs)
            if (neighbor(p, d) == q)
                return bond_strength(ts[*a.at(p)], ts[*a.at(q)], d);
        return 0;
    };
    std::uint64_t best = UINT64_MAX;
    for (std::uint64_t mask = 1; mask < (1ull << n) - 1; ++mask) {
        std::uint64_t cut = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (((mask >> i) & 1) != ((mask >> j) & 1)) cut += weight(pts[i], pts[j]);
        best = std::min(best, cut);
    }
    return best;
}

}  // namespace

TEST_CASE("bond strength follows the matching-pair rule") {
    TileType a = tile4("a", {}, g("a", 2), {}, {});
    TileType b = tile4("b", {}, {}, {}, g("a", 2));
    TileType c = tile4("c", {}, {}, {}, g("a", 1));
    TileType d = tile4("d", {}, g("z", 0), {}, g("a", 0));
    TileType e = tile4("e", {}, {}, {}, g("a", 0));
    CHECK(bond_strength(a, b, Dir::East) == 2);
    CHECK(bond_strength(a, c, Dir::East) == 0);  // strengths differ
    TileType a0 = tile4("a0", {}, g("a", 0), {}, {});
    CHECK(bond_strength(a0, e, Dir::East) == 0);  // matched strength zero
    (void)d;
}

TEST_CASE("bond strength is symmetric") {
    SplitMix64 rng(7);
    auto rand_glue = [&]() {
        return Glue{std::string(1, static_cast<char>('a' + rng.below(3))),
                    static_cast<std::uint32_t>(rng.below(3))};
    };
    for (int it = 0; it < 200; ++it) {
        TileType t = tile4("t", rand_glue(), rand_glue(), rand_glue(), rand_glue());
        TileType u = tile4("u", rand_glue(), rand_glue(), rand_glue(), rand_glue());
        for (Dir d : kDirs) CHECK(bond_strength(t, u, d) == bond_strength(u, t, opposite(d)));
    }
}

TEST_CASE("attachment strength sums over neighbors") {
    TileSet ts;
    TileIndex mid = ts.add(tile4("mid", g("n", 1), g("e", 2), g("s", 1), g("w", 1)));
    TileIndex west = ts.add(tile4("west", {}, g("w", 1), {}, {}));
    TileIndex south = ts.add(tile4("south", g("s", 1), {}, {}, {}));
    Assembly a;
    CHECK(attachment_strength(a, ts, {0, 0}, ts[mid]) == 0);
    a.place({-1, 0}, west);
    CHECK(attachment_strength(a, ts, {0, 0}, ts[mid]) == 1);
    a.place({0, -1}, south);
    CHECK(attachment_strength(a, ts, {0, 0}, ts[mid]) == 2);  // additivity
    CHECK_THROWS(attachment_strength(a, ts, {0, -1}, ts[mid]));
    // bounded by the tile's total side strength
    std::uint32_t total = 0;
    for (Dir d : kDirs) total += ts[mid].side(d).strength;
    CHECK(attachment_strength(a, ts, {0, 0}, ts[mid]) <= total);
}

TEST_CASE("full grid graph") {
    CHECK(full_grid_graph({{0, 0}}).edges.empty());
    BindingGraph g3 = full_grid_graph({{0, 0}, {1, 0}, {0, 1}});
    CHECK(g3.edges.size() == 2);
    CHECK(g3.connected());
    BindingGraph diag = full_grid_graph({{0, 0}, {1, 1}});
    CHECK_FALSE(diag.connected());
}

TEST_CASE("tau stability basics") {
    TileSet ts;
    TileIndex solo = ts.add(tile4("solo", {}, {}, {}, {}));
    Assembly single;
    single.place({5, 5}, solo);
    CHECK(is_tau_stable(single, ts, 99));  // singleton stable at any tau

    TileIndex l = ts.add(tile4("l", {}, g("b", 1), {}, {}));
    TileIndex r = ts.add(tile4("r", {}, {}, {}, g("b", 1)));
    Assembly pair;
    pair.place({0, 0}, l);
    pair.place({1, 0}, r);
    CHECK(is_tau_stable(pair, ts, 1));
    CHECK_FALSE(is_tau_stable(pair, ts, 2));  // one strength-1 bond
}

TEST_CASE("2x2 block with unit bonds is 2-stable") {
    TileSet ts;
    // every internal contact bonds at strength 1
    TileIndex bl = ts.add(tile4("bl", g("v0", 1), g("h0", 1), {}, {}));
    TileIndex br = ts.add(tile4("br", g("v1", 1), {}, {}, g("h0", 1)));
    TileIndex tl = ts.add(tile4("tl", {}, g("h1", 1), g("v0", 1), {}));
    TileIndex tr = ts.add(tile4("tr", {}, {}, g("v1", 1), g("h1", 1)));
    Assembly a;
    a.place({0, 0}, bl);
    a.place({1, 0}, br);
    a.place({0, 1}, tl);
    a.place({1, 1}, tr);
    CHECK(brute_min_cut(a, ts) == 2);  // every bipartition severs >= 2 unit bonds
    CHECK(is_tau_stable(a, ts, 2));
    CHECK_FALSE(is_tau_stable(a, ts, 3));
    // monotone downward in tau
    CHECK(is_tau_stable(a, ts, 1));
}

TEST_CASE("min cut agrees with the bipartition oracle on random chains and blobs") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        TileSet ts;
        Assembly a;
        // random connected blob of n tiles on a 4x4 board with random glue
        // strengths 1..2 on touching sides
        std::size_t n = 2 + rng.below(9);
        std::vector<Point> placed{{0, 0}};
        std::vector<std::array<Glue, 4>> sides(16);
        // choose positions by random adjacent growth
        while (placed.size() < n) {
            Point base = placed[rng.below(placed.size())];
            Point q = neighbor(base, kDirs[rng.below(4)]);
            if (q.x < 0 || q.y < 0 || q.x > 3 || q.y > 3) continue;
            if (std::find(placed.begin(), placed.end(), q) != placed.end()) continue;
            placed.push_back(q);
        }
        auto idx_of = [&](const Point& p) {
            return std::find(placed.begin(), placed.end(), p) - placed.begin();
        };
        // assign a glue to every touching pair
        std::vector<TileType> types(placed.size());
        for (std::size_t i = 0; i < placed.size(); ++i)
            types[i].name = "t" + std::to_string(i);
        int gid = 0;
        for (std::size_t i = 0; i < placed.size(); ++i)
            for (Dir d : {Dir::East, Dir::North}) {
                Point q = neighbor(placed[i], d);
                auto it = std::find(placed.begin(), placed.end(), q);
                if (it == placed.end()) continue;
                std::uint32_t s = 1 + static_cast<std::uint32_t>(rng.below(2));
                Glue glue{"g" + std::to_string(gid++), s};
                types[i].side(d) = glue;
                types[static_cast<std::size_t>(idx_of(q))].side(opposite(d)) = glue;
            }
        std::vector<TileIndex> ids;
        for (auto& t : types) ids.push_back(ts.add(std::move(t)));
        for (std::size_t i = 0; i < placed.size(); ++i) a.place(placed[i], ids[i]);

        BindingGraph bg = binding_graph(a, ts);
        if (!bg.connected()) continue;
        CHECK(min_cut_stoer_wagner(bg) == brute_min_cut(a, ts));
    }
}

TEST_CASE("tileset json round trip and validation") {
    const char* text = R"({
      "tiles": [
        {"name": "a", "north": ["x", 1], "east": ["y", 2], "south": ["", 0], "west": ["", 0]},
        {"name": "b", "north": ["", 0], "east": ["", 0], "south": ["x", 1], "west": ["y", 2]}
      ],
      "markers": { "black": ["a"] }
    })";
    TileSet ts = parse_tileset_json(text);
    CHECK(ts.size() == 2);
    CHECK(ts.is_marked("black", *ts.find("a")));
    CHECK_FALSE(ts.is_marked("black", *ts.find("b")));
    TileSet again = parse_tileset_json(tileset_to_json(ts));
    CHECK(again.size() == 2);
    CHECK(again[*again.find("a")].side(Dir::East).strength == 2);

    CHECK_THROWS(parse_tileset_json(R"({"tiles":[{"name":"a","north":["x",1]}]})"));
    CHECK_THROWS(parse_tileset_json(
        R"({"tiles":[{"name":"a","north":["x",-1],"east":["",0],"south":["",0],"west":["",0]}]})"));
}

TEST_CASE("duplicate structural types are permitted and reported") {
    TileSet ts;
    ts.add(tile4("a", g("x", 1), {}, {}, {}));
    ts.add(tile4("b", g("x", 1), {}, {}, {}));
    CHECK(ts.structural_duplicates().size() == 1);
    CHECK_THROWS(ts.add(tile4("a", {}, {}, {}, {})));  // duplicate name
}
