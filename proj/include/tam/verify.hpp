#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "tam/assembly.hpp"
#include "tam/sim.hpp"

namespace tam {

// Target point set: a total pure predicate restricted to a window.
struct TargetSpec {
    std::function<bool(const Point&)> contains;
    Window window;
};

enum class VerifyStatus { Pass, Fail, Inconclusive };

struct SeedOutcome {
    std::uint64_t seed = 0;
    RunStatus stop = RunStatus::Terminal;
    std::uint64_t steps = 0;
    std::vector<Point> missing;  // target points not realized
    std::vector<Point> extra;    // realized points outside the target
    VerifyStatus status = VerifyStatus::Pass;
};

struct VerifyReport {
    VerifyStatus status = VerifyStatus::Pass;
    std::vector<SeedOutcome> per_seed;

    int exit_code() const {
        switch (status) {
            case VerifyStatus::Pass: return 0;
            case VerifyStatus::Fail: return 1;
            case VerifyStatus::Inconclusive: return 2;
        }
        return 2;
    }
    std::string text() const;
};

struct VerifyOptions {
    std::uint64_t budget = 1'000'000;
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
    // the run is truncated on a window enlarged by this margin so growth may
    // route around the comparison window
    std::int64_t run_margin = 0;
};

// Weak self-assembly on a window: marked points of the marker class must
// equal the target exactly, for every seed.
VerifyReport verify_weak(const TileAssemblySystem& sys, const std::string& marker_class,
                         const TargetSpec& target, const VerifyOptions& opts);

// Strict self-assembly on a window: the assembly domain must equal the
// target exactly.
VerifyReport verify_strict(const TileAssemblySystem& sys, const TargetSpec& target,
                           const VerifyOptions& opts);

enum class DiamondDecision { Accepted, Inconclusive };

// Semi-decision: accepted as soon as a marked tile is placed at L1 radius r.
DiamondDecision decide_diamond_membership(const TileAssemblySystem& sys,
                                          const std::string& marker_class, std::int64_t r,
                                          std::uint64_t budget, std::uint64_t seed = 0);

// Open quadrants (axes excluded) intersected by the assembly domain.
std::set<std::string> quadrant_footprint(const Assembly& a);

}  // namespace tam
