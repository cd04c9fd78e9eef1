#include "tam/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tam/binding.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tam {

GeneratorSet GeneratorSet::make(std::int64_t c, std::vector<Point> v) {
    if (c < 2) throw std::invalid_argument("generator: c must be >= 2");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.empty()) throw std::invalid_argument("generator: V must be nonempty");
    for (const Point& p : v)
        if (p.x < 0 || p.y < 0 || p.x >= c || p.y >= c)
            throw std::invalid_argument("generator: V point " + to_string(p) + " outside square");
    if (static_cast<std::int64_t>(v.size()) == c * c)
        throw std::invalid_argument("generator: V must not be the full square");
    return GeneratorSet{c, std::move(v)};
}

GeneratorSet builtin_generator(const std::string& name) {
    if (name == "sierpinski-triangle")
        return GeneratorSet::make(2, {{0, 0}, {1, 0}, {0, 1}});
    if (name == "sierpinski-carpet")
        return GeneratorSet::make(
            3, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}});
    if (name == "h-fractal")
        return GeneratorSet::make(3, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 0}, {2, 1}, {2, 2}});
    throw std::invalid_argument("unknown builtin generator: " + name);
}

std::vector<std::string> builtin_generator_names() {
    return {"sierpinski-triangle", "sierpinski-carpet", "h-fractal"};
}

GeneratorSet parse_generator(const std::string& text) {
    // c=<int>; V=(x,y),(x,y),...
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("generator parse: " + why);
    };
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.rfind("c=", 0) != 0) fail("expected 'c='");
    std::size_t semi = s.find(';');
    if (semi == std::string::npos) fail("expected ';'");
    std::int64_t c = std::stoll(s.substr(2, semi - 2));
    std::string rest = s.substr(semi + 1);
    if (rest.rfind("V=", 0) != 0) fail("expected 'V='");
    rest = rest.substr(2);
    std::vector<Point> v;
    std::size_t pos = 0;
    while (pos < rest.size()) {
        if (rest[pos] != '(') fail("expected '('");
        std::size_t close = rest.find(')', pos);
        if (close == std::string::npos) fail("unclosed '('");
        std::string pair = rest.substr(pos + 1, close - pos - 1);
        std::size_t comma = pair.find(',');
        if (comma == std::string::npos) fail("expected ','");
        v.push_back({std::stoll(pair.substr(0, comma)), std::stoll(pair.substr(comma + 1))});
        pos = close + 1;
        if (pos < rest.size()) {
            if (rest[pos] != ',') fail("expected ',' between points");
            ++pos;
        }
    }
    return GeneratorSet::make(c, std::move(v));
}

std::string generator_to_string(const GeneratorSet& g) {
    std::ostringstream os;
    os << "c=" << g.c << "; V=";
    for (std::size_t i = 0; i < g.V.size(); ++i) {
        if (i) os << ",";
        os << "(" << g.V[i].x << "," << g.V[i].y << ")";
    }
    return os.str();
}

namespace {

std::int64_t checked_pow(std::int64_t c, unsigned i) {
    std::int64_t r = 1;
    for (unsigned k = 0; k < i; ++k) {
        if (r > (INT64_MAX / 4) / c) throw std::overflow_error("stage index too large");
        r *= c;
    }
    return r;
}

}  // namespace

std::vector<Point> stage_points_serial(const GeneratorSet& g, unsigned i) {
    checked_pow(g.c, i);  // overflow guard
    std::set<Point> pts{{0, 0}};
    std::int64_t scale = 1;
    for (unsigned k = 0; k < i; ++k) {
        std::set<Point> next = pts;
        for (const Point& v : g.V)
            for (const Point& p : pts) next.insert(p + v.scaled(scale));
        pts = std::move(next);
        scale *= g.c;
    }
    return {pts.begin(), pts.end()};
}

std::vector<Point> stage_points(const GeneratorSet& g, unsigned i) {
    checked_pow(g.c, i);
    if (i == 0) return {{0, 0}};
    // Expand top-down: each point of stage i is sum over levels of c^k * v_k
    // with v_k in V (plus the origin chain). When (0,0) is in V the copies
    // are disjoint; in general dedup at the end.
    std::vector<Point> base = stage_points(g, i - 1);
    std::int64_t scale = checked_pow(g.c, i - 1);
    std::vector<Point> out(base.size() * g.V.size() + base.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t vi = 0; vi < static_cast<std::int64_t>(g.V.size()); ++vi) {
        Point off = g.V[static_cast<std::size_t>(vi)].scaled(scale);
        std::size_t slot = static_cast<std::size_t>(vi) * base.size();
        for (std::size_t k = 0; k < base.size(); ++k) out[slot + k] = base[k] + off;
    }
    std::copy(base.begin(), base.end(), out.begin() + static_cast<std::ptrdiff_t>(
                                            base.size() * g.V.size()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Count points of stage `levels` (built from `base` upward with offsets
// scale*V, scale*c*V, ...) with |x|+|y| <= n. All stage points are in the
// first quadrant so the radius is x+y.
// Count of (X_levels + origin) with x+y <= n. Stage blocks at a given level
// are pairwise disjoint (distinct c^k-blocks), and the identity part X_i is
// the (0,0)-block, so the disjoint decomposition is exact.
std::uint64_t count_rec(const GeneratorSet& g, unsigned levels, std::int64_t scale,
                        const Point& origin, std::int64_t n) {
    if (origin.x + origin.y > n) return 0;  // origin is the block minimum
    if (levels == 0) return 1;
    std::uint64_t total = 0;
    std::int64_t sub_scale = scale / g.c;
    bool has_origin = std::binary_search(g.V.begin(), g.V.end(), Point{0, 0});
    if (!has_origin) total += count_rec(g, levels - 1, sub_scale, origin, n);
    for (const Point& v : g.V) {
        Point o = origin + v.scaled(sub_scale);
        total += count_rec(g, levels - 1, sub_scale, o, n);
    }
    return total;
}

}  // namespace

std::uint64_t stage_count_within_serial(const GeneratorSet& g, unsigned max_stage,
                                        std::int64_t n) {
    std::int64_t scale = checked_pow(g.c, max_stage);
    return count_rec(g, max_stage, scale, {0, 0}, n);
}

std::uint64_t stage_count_within(const GeneratorSet& g, unsigned max_stage, std::int64_t n) {
    if (max_stage == 0) return (0 <= n) ? 1 : 0;
    std::int64_t scale = checked_pow(g.c, max_stage);
    std::int64_t sub_scale = scale / g.c;
    bool has_origin = std::binary_search(g.V.begin(), g.V.end(), Point{0, 0});
    std::uint64_t total =
        has_origin ? 0 : count_rec(g, max_stage - 1, sub_scale, {0, 0}, n);
    const auto vcount = static_cast<std::int64_t>(g.V.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
#endif
    for (std::int64_t vi = 0; vi < vcount; ++vi) {
        Point o = g.V[static_cast<std::size_t>(vi)].scaled(sub_scale);
        total += count_rec(g, max_stage - 1, sub_scale, o, n);
    }
    return total;
}

ClauseReport classify_pinch_point(const GeneratorSet& g) {
    ClauseReport rep;
    auto has = [&](std::int64_t x, std::int64_t y) {
        return std::binary_search(g.V.begin(), g.V.end(), Point{x, y});
    };
    if (!(has(0, 0) && has(0, g.c - 1) && has(g.c - 1, 0)))
        rep.failed_clauses.push_back("corners {(0,0),(0,c-1),(c-1,0)} not all present");
    for (std::int64_t x = 1; x < g.c; ++x)
        if (has(x, g.c - 1)) {
            rep.failed_clauses.push_back("top row occupied beyond column 0");
            break;
        }
    for (std::int64_t y = 1; y < g.c; ++y)
        if (has(g.c - 1, y)) {
            rep.failed_clauses.push_back("right column occupied beyond row 0");
            break;
        }
    if (!full_grid_graph(g.V).connected())
        rep.failed_clauses.push_back("full grid graph of V not connected");
    rep.value = rep.failed_clauses.empty();
    return rep;
}

ClauseReport classify_nice(const GeneratorSet& g) {
    ClauseReport rep;
    auto has = [&](std::int64_t x, std::int64_t y) {
        return std::binary_search(g.V.begin(), g.V.end(), Point{x, y});
    };
    bool bottom = true, left = true;
    for (std::int64_t x = 0; x < g.c; ++x)
        if (!has(x, 0)) bottom = false;
    for (std::int64_t y = 0; y < g.c; ++y)
        if (!has(0, y)) left = false;
    if (!bottom) rep.failed_clauses.push_back("bottom row not fully contained in V");
    if (!left) rep.failed_clauses.push_back("left column not fully contained in V");
    if (!full_grid_graph(g.V).connected())
        rep.failed_clauses.push_back("full grid graph of V not connected");
    rep.value = rep.failed_clauses.empty();
    return rep;
}

std::vector<ZetaEstimate> zeta_dimension_estimate(const PointSource& source,
                                                  const std::vector<std::int64_t>& schedule) {
    for (std::int64_t n : schedule)
        if (n < 2) throw std::invalid_argument("zeta schedule values must be >= 2");
    std::vector<std::int64_t> sorted(schedule);
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint64_t> bucket(sorted.size() + 1, 0);
    source([&](const Point& p) {
        std::int64_t r = std::llabs(p.x) + std::llabs(p.y);
        // first schedule index with n >= r
        auto it = std::lower_bound(sorted.begin(), sorted.end(), r);
        bucket[static_cast<std::size_t>(it - sorted.begin())]++;
    });
    // prefix sums: count_<=n for each schedule n
    std::vector<ZetaEstimate> out;
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        acc += bucket[i];
        double est = std::log(static_cast<double>(acc)) / std::log(static_cast<double>(sorted[i]));
        out.push_back({sorted[i], acc, est});
    }
    return out;
}

std::vector<ZetaEstimate> zeta_for_generator(const GeneratorSet& g, unsigned max_stage,
                                             const std::vector<std::int64_t>& schedule) {
    std::vector<ZetaEstimate> out;
    for (std::int64_t n : schedule) {
        if (n < 2) throw std::invalid_argument("zeta schedule values must be >= 2");
        std::uint64_t cnt = stage_count_within(g, max_stage, n);
        double est = std::log(static_cast<double>(cnt)) / std::log(static_cast<double>(n));
        out.push_back({n, cnt, est});
    }
    return out;
}

FiberGeometry fiber_geometry(const GeneratorSet& g, unsigned i) {
    std::int64_t w = static_cast<std::int64_t>(i) + 1;
    std::int64_t size = checked_pow(g.c, i + 1) + w;
    return {w, size};
}

std::vector<Point> fiber(const GeneratorSet& g, unsigned i) {
    ClauseReport nice = classify_nice(g);
    if (!nice.value) {
        std::string why = "fiber: generator is not nice:";
        for (const auto& c : nice.failed_clauses) why += " [" + c + "]";
        throw std::invalid_argument(why);
    }
    std::set<Point> pts;
    // F_0
    {
        FiberGeometry geo = fiber_geometry(g, 0);
        for (std::int64_t k = 0; k < geo.size; ++k) {
            pts.insert({k, 0});
            pts.insert({0, k});
        }
        for (const Point& p : stage_points(g, 1)) pts.insert(p + Point{1, 1});
    }
    for (unsigned level = 1; level <= i; ++level) {
        FiberGeometry geo = fiber_geometry(g, level);
        std::int64_t pitch = checked_pow(g.c, level);  // copies sit at v * c^level
        std::set<Point> next;
        for (std::int64_t k = 0; k < geo.size; ++k)
            for (std::int64_t b = 0; b < geo.band_width; ++b) {
                next.insert({k, b});
                next.insert({b, k});
            }
        for (const Point& v : g.V) {
            Point off = v.scaled(pitch) + Point{1, 1};
            for (const Point& p : pts) next.insert(p + off);
        }
        pts = std::move(next);
    }
    return {pts.begin(), pts.end()};
}

std::vector<Point> diamond(std::int64_t r) {
    if (r < 0) throw std::invalid_argument("diamond: negative radius");
    if (r == 0) return {{0, 0}};
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(4 * r));
    for (std::int64_t k = 0; k < r; ++k) {
        pts.push_back({r - k, k});    // E -> N edge
        pts.push_back({-k, r - k});   // N -> W edge
        pts.push_back({k - r, -k});   // W -> S edge
        pts.push_back({k, k - r});    // S -> E edge
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

bool diamond_union_contains(const std::vector<std::int64_t>& radii, const Point& p) {
    std::int64_t r = std::llabs(p.x) + std::llabs(p.y);
    return std::find(radii.begin(), radii.end(), r) != radii.end();
}

std::string points_to_text(const std::vector<Point>& pts) {
    std::vector<Point> sorted(pts);
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    for (const Point& p : sorted) os << p.x << ' ' << p.y << '\n';
    return os.str();
}

std::vector<Point> parse_points_text(const std::string& text) {
    std::vector<Point> pts;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::int64_t x, y;
        if (!(ls >> x >> y)) throw std::invalid_argument("point set: bad line '" + line + "'");
        pts.push_back({x, y});
    }
    return pts;
}

}  // namespace tam
