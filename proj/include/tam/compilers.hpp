#pragma once

#include <cstdint>
#include <string>

#include "tam/compiled.hpp"
#include "tam/fractal.hpp"
#include "tam/tm.hpp"

namespace tam {

// The 7-type temperature-2 XOR system whose "black" marker class paints the
// discrete Sierpinski triangle in the first quadrant (mod-2 Pascal values).
CompiledSystem builtin_xor_triangle();

// Infinite stack of wedge simulations of M on 0,1,2,... driven by a counter
// carried on the driver's tape; verdict n lands as an accept/reject marker
// at (n, 0). Marker classes: "accept", "reject".
CompiledSystem compile_decider_stack(const TuringMachine& m);

// Thickening-bar construction: a square-ruler bar below the positive x-axis
// opens a portal at every (f(n), -1); upward growths simulate M(n) in
// width-capped lanes; a halt routes a one-tile-wide signal down the lane's
// right side and places a black marker at (f(n), 0). Marker class: "halt".
// Spacing: "quadratic" (f(n)=n^2) or "identity" (f(n)=n; rejected: the
// identity family leaves no lane room -- kept for CLI surface, errors out).
struct CeBarOptions {
    std::string spacing = "quadratic";
    unsigned preseeded_inputs = 6;  // inputs 0..k-1 run in seed-zone cones
    std::int64_t zone_cone_width = 26;
};
CompiledSystem compile_ce_bar(const TuringMachine& m, const CeBarOptions& opts = {});

std::int64_t ce_spacing(const std::string& family, std::int64_t n);

// Strict self-assembly of the fibered fractal at desk scale: a directed
// system whose terminal assembly is exactly fiber(g, stages). Requires a
// nice generator.
CompiledSystem compile_fibered_fractal(const GeneratorSet& g, unsigned stages = 3);

}  // namespace tam
