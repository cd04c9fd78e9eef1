#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tam/geometry.hpp"

namespace tam {

// Generator of a c-discrete self-similar fractal: a non-trivial subset of
// the c x c square. Stages follow X_0 = {(0,0)}, X_{i+1} = X_i + c^i V.
struct GeneratorSet {
    std::int64_t c = 2;
    std::vector<Point> V;  // sorted, deduplicated

    static GeneratorSet make(std::int64_t c, std::vector<Point> v);
};

// Built-ins: "sierpinski-triangle", "sierpinski-carpet", "h-fractal".
GeneratorSet builtin_generator(const std::string& name);
std::vector<std::string> builtin_generator_names();

// Text format: c=<int>; V=(x,y),(x,y),...
GeneratorSet parse_generator(const std::string& text);
std::string generator_to_string(const GeneratorSet& g);

// Exact stage-i point set, sorted. Throws on coordinate overflow.
std::vector<Point> stage_points(const GeneratorSet& g, unsigned i);
// Serial reference implementation kept for testing the parallel kernel.
std::vector<Point> stage_points_serial(const GeneratorSet& g, unsigned i);

// Number of stage-max_stage points with |x|+|y| <= n (OpenMP reduction
// over first-level copies; serial reference alongside).
std::uint64_t stage_count_within(const GeneratorSet& g, unsigned max_stage, std::int64_t n);
std::uint64_t stage_count_within_serial(const GeneratorSet& g, unsigned max_stage, std::int64_t n);

struct ClauseReport {
    bool value = false;
    std::vector<std::string> failed_clauses;
};

// Pinch-point: corners (0,0),(0,c-1),(c-1,0) present, top row and right
// column empty beyond the corner, full grid graph connected.
ClauseReport classify_pinch_point(const GeneratorSet& g);

// Nice: full bottom row and left column present, full grid graph connected.
ClauseReport classify_nice(const GeneratorSet& g);

// One pass of log|A_<=n| / log n over the schedule. The source enumerates
// the point set lazily (it may be infinite; enumeration is truncated by the
// caller's construction, e.g. a bounded stage).
using PointSource = std::function<void(const std::function<void(const Point&)>&)>;

struct ZetaEstimate {
    std::int64_t n;
    std::uint64_t count;
    double estimate;
};

std::vector<ZetaEstimate> zeta_dimension_estimate(const PointSource& source,
                                                  const std::vector<std::int64_t>& schedule);

// Convenience: zeta estimates for a fractal generator, counting stage
// points at each schedule radius without materializing the stage.
std::vector<ZetaEstimate> zeta_for_generator(const GeneratorSet& g, unsigned max_stage,
                                             const std::vector<std::int64_t>& schedule);

// Fibered version. The recursion is fixed here (the fibering operator's
// base offsets and band growth schedule):
//   w_i = i + 1,  S_i = c^(i+1) + w_i
//   F_0     = Lband(width 1, size S_0)  U  (stage 1 + (1,1))
//   F_{i+1} = Lband(width w_{i+1}, size S_{i+1})
//             U  union over v in V of (F_i + (1,1) + v * c^(i+1))
// Bands widen by one per stage, mirroring the counter bit-width growth.
struct FiberGeometry {
    std::int64_t band_width;   // w_i
    std::int64_t size;         // S_i
};
FiberGeometry fiber_geometry(const GeneratorSet& g, unsigned i);

// Requires classify_nice(g); throws std::invalid_argument otherwise.
std::vector<Point> fiber(const GeneratorSet& g, unsigned i);

// Diamonds: D_r = { |x|+|y| = r }, D_A = union over r in A.
std::vector<Point> diamond(std::int64_t r);
bool diamond_union_contains(const std::vector<std::int64_t>& radii, const Point& p);

// Point-set text export: "x y" per line, sorted.
std::string points_to_text(const std::vector<Point>& pts);
std::vector<Point> parse_points_text(const std::string& text);

}  // namespace tam
