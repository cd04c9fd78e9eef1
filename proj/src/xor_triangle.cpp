#include "tam/compilers.hpp"

namespace tam {

namespace {
Glue g1(const std::string& c) { return {c, 1}; }
Glue g2(const std::string& c) { return {c, 2}; }
}  // namespace

CompiledSystem builtin_xor_triangle() {
    CompiledSystem cs;
    TileSet& T = cs.system.tiles;

    TileIndex seed = T.add(make_tile("S", g2("by"), g2("bx"), null_glue(), null_glue()));
    TileIndex bx = T.add(make_tile("bx1", g1("v1"), g2("bx"), null_glue(), g2("bx")));
    TileIndex by = T.add(make_tile("by1", g2("by"), g1("h1"), g2("by"), null_glue()));
    // interior value = west xor south; bx1 runs east along y=0 emitting v1
    // upward, by1 runs north along x=0 emitting h1 eastward
    TileIndex t00 = T.add(make_tile("x00", g1("v0"), g1("h0"), g1("v0"), g1("h0")));
    TileIndex t01 = T.add(make_tile("x01", g1("v1"), g1("h1"), g1("v1"), g1("h0")));
    TileIndex t10 = T.add(make_tile("x10", g1("v1"), g1("h1"), g1("v0"), g1("h1")));
    TileIndex t11 = T.add(make_tile("x11", g1("v0"), g1("h0"), g1("v1"), g1("h1")));
    (void)t00;
    (void)t11;
    T.set_marker_class("black", {seed, bx, by, t01, t10});

    cs.system.seed.place({0, 0}, seed);
    cs.system.temperature = 2;
    cs.note("black", "(x,y) with binomial(x+y, x) odd (first quadrant)");
    return cs;
}

}  // namespace tam
