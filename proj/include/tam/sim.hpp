#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tam/assembly.hpp"
#include "tam/binding.hpp"
#include "tam/geometry.hpp"
#include "tam/rng.hpp"

namespace tam {

// A legal single-tile addition: the strength is the attachment strength at
// the moment the site was computed and is always >= tau.
struct FrontierSite {
    Point pos;
    TileIndex tile;
    std::uint32_t strength;

    friend bool operator<(const FrontierSite& a, const FrontierSite& b) {
        if (a.pos != b.pos) return a.pos < b.pos;
        return a.tile < b.tile;
    }
    friend bool operator==(const FrontierSite& a, const FrontierSite& b) {
        return a.pos == b.pos && a.tile == b.tile;
    }
};

// Replayable execution state of one system: the assembly so far plus the
// seeded generator and the step log.
class AssemblySequence {
public:
    AssemblySequence(const TileAssemblySystem& sys, std::uint64_t seed);

    const TileAssemblySystem& system() const { return *sys_; }
    const Assembly& assembly() const { return asm_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<Assembly::Placement>& steps() const { return steps_; }

    // All currently attachable (position, tile) pairs.
    std::vector<FrontierSite> frontier() const;
    bool frontier_empty() const;
    // Frontier sites whose position lies inside the window.
    std::vector<FrontierSite> frontier_in(const Window& w) const;

    // One uniformly random stable addition; false iff the assembly is
    // terminal. Fairness: every 64th step forces the oldest live site so no
    // site starves on infinite runs.
    bool step();
    // Deterministic addition (used by replay and by explore-style drivers).
    void apply(const FrontierSite& site);

    std::uint64_t steps_taken() const { return steps_.size(); }

private:
    void recompute_site(const Point& p);
    void after_place(const Point& p);

    const TileAssemblySystem* sys_;
    Assembly asm_;
    std::uint64_t seed_;
    SplitMix64 rng_;
    std::vector<Assembly::Placement> steps_;
    std::uint64_t ticks_ = 0;

    // incremental frontier: per empty candidate point, the attachable tiles
    std::unordered_map<Point, std::vector<TileIndex>, PointHash> sites_;
    // age order for the fairness cap (point -> first tick seen)
    std::unordered_map<Point, std::uint64_t, PointHash> site_age_;
};

enum class RunStatus { Terminal, BudgetExhausted, WindowQuiescent };

struct RunResult {
    Assembly assembly;
    RunStatus status;
    std::uint64_t steps = 0;
    std::uint64_t seed = 0;
};

const char* run_status_name(RunStatus s);

// Iterate `step` until terminal, budget, or no frontier site intersects the
// window (reported distinctly: desk-scale truncation, not terminality).
RunResult run(const TileAssemblySystem& sys, std::uint64_t budget, const Window& window,
              std::uint64_t seed);

// Emits each point of the marker class at the moment a marked tile lands
// there. Stops after `budget` placements (or terminality).
std::vector<Point> enumerate_marked(const TileAssemblySystem& sys, const std::string& marker_class,
                                    std::uint64_t seed, std::uint64_t budget,
                                    const std::function<bool(const Point&)>& emit = nullptr);

struct ExploreResult {
    std::vector<Assembly> assemblies;      // all producible up to the bound
    std::vector<std::size_t> terminal;     // indices of bound-terminal ones
    bool capped = false;                   // hit the state cap
};

// Breadth-first closure of the seed under single-tile stable additions,
// deduplicated by placement map. Combinatorial: keep max_tiles small.
ExploreResult explore_all(const TileAssemblySystem& sys, std::size_t max_tiles,
                          std::size_t state_cap = 2'000'000);

struct DirectedVerdict {
    bool directed = true;
    bool capped = false;
    // witnesses when not directed: two assemblies disagreeing at a point
    std::optional<std::pair<Assembly, Assembly>> witness;
    std::string reason;
};

// Directed-within-bound: all producible assemblies up to the bound are
// pairwise consistent and all bound-terminal assemblies coincide.
DirectedVerdict check_directed(const TileAssemblySystem& sys, std::size_t max_tiles);

struct LocalDeterminismReport {
    bool pass = true;
    std::string violation;  // first violation, empty on pass
    Point where{};
};

// Two-condition local determinism check over a finished sequence; input
// sides are the sides with nonzero bond strength at placement time. The
// paper defers the formal definition to its citation; this is the standard
// operationalization (documented in the README).
LocalDeterminismReport check_local_determinism(const AssemblySequence& seq);

}  // namespace tam
