#include "tam/verify.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace tam {

std::string VerifyReport::text() const {
    std::ostringstream os;
    auto name = [](VerifyStatus s) {
        switch (s) {
            case VerifyStatus::Pass: return "pass";
            case VerifyStatus::Fail: return "fail";
            case VerifyStatus::Inconclusive: return "inconclusive";
        }
        return "?";
    };
    os << "verdict: " << name(status) << "\n";
    for (const auto& so : per_seed) {
        os << "seed " << so.seed << ": status=" << name(so.status)
           << " stop=" << run_status_name(so.stop) << " steps=" << so.steps
           << " missing=" << so.missing.size() << " extra=" << so.extra.size() << "\n";
        for (std::size_t i = 0; i < so.missing.size() && i < 16; ++i)
            os << "  missing " << to_string(so.missing[i]) << "\n";
        for (std::size_t i = 0; i < so.extra.size() && i < 16; ++i)
            os << "  extra " << to_string(so.extra[i]) << "\n";
    }
    return os.str();
}

namespace {

SeedOutcome check_one(const TileAssemblySystem& sys, const std::string* marker_class,
                      const TargetSpec& target, std::uint64_t budget, std::int64_t margin,
                      std::uint64_t seed) {
    SeedOutcome out;
    out.seed = seed;
    Window run_window{{target.window.lo.x - margin, target.window.lo.y - margin},
                      {target.window.hi.x + margin, target.window.hi.y + margin}};
    RunResult rr = run(sys, budget, run_window, seed);
    out.stop = rr.status;
    out.steps = rr.steps;

    std::unordered_set<Point, PointHash> realized;
    if (marker_class) {
        std::unordered_set<TileIndex> marked;
        auto it = sys.tiles.marker_classes().find(*marker_class);
        if (it != sys.tiles.marker_classes().end())
            marked.insert(it->second.begin(), it->second.end());
        for (const auto& [p, t] : rr.assembly.placements())
            if (target.window.contains(p) && marked.count(t)) realized.insert(p);
    } else {
        for (const auto& [p, t] : rr.assembly.placements())
            if (target.window.contains(p)) realized.insert(p);
    }

    for (std::int64_t y = target.window.lo.y; y <= target.window.hi.y; ++y)
        for (std::int64_t x = target.window.lo.x; x <= target.window.hi.x; ++x) {
            Point p{x, y};
            bool want = target.contains(p);
            bool have = realized.count(p) != 0;
            if (want && !have) out.missing.push_back(p);
            if (!want && have) out.extra.push_back(p);
        }

    if (out.missing.empty() && out.extra.empty())
        out.status = VerifyStatus::Pass;
    else if (rr.status == RunStatus::BudgetExhausted)
        out.status = VerifyStatus::Inconclusive;
    else
        out.status = VerifyStatus::Fail;
    return out;
}

VerifyReport run_all(const TileAssemblySystem& sys, const std::string* marker_class,
                     const TargetSpec& target, const VerifyOptions& opts) {
    VerifyReport rep;
    rep.per_seed.resize(opts.seeds.size());
    const auto n = static_cast<std::int64_t>(opts.seeds.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t i = 0; i < n; ++i)
        rep.per_seed[static_cast<std::size_t>(i)] =
            check_one(sys, marker_class, target, opts.budget, opts.run_margin,
                      opts.seeds[static_cast<std::size_t>(i)]);
    rep.status = VerifyStatus::Pass;
    for (const auto& so : rep.per_seed) {
        if (so.status == VerifyStatus::Fail) rep.status = VerifyStatus::Fail;
        if (so.status == VerifyStatus::Inconclusive && rep.status == VerifyStatus::Pass)
            rep.status = VerifyStatus::Inconclusive;
    }
    return rep;
}

}  // namespace

VerifyReport verify_weak(const TileAssemblySystem& sys, const std::string& marker_class,
                         const TargetSpec& target, const VerifyOptions& opts) {
    return run_all(sys, &marker_class, target, opts);
}

VerifyReport verify_strict(const TileAssemblySystem& sys, const TargetSpec& target,
                           const VerifyOptions& opts) {
    return run_all(sys, nullptr, target, opts);
}

DiamondDecision decide_diamond_membership(const TileAssemblySystem& sys,
                                          const std::string& marker_class, std::int64_t r,
                                          std::uint64_t budget, std::uint64_t seed) {
    bool accepted = false;
    enumerate_marked(sys, marker_class, seed, budget, [&](const Point& p) {
        if (std::llabs(p.x) + std::llabs(p.y) == r) {
            accepted = true;
            return false;  // stop the stream
        }
        return true;
    });
    return accepted ? DiamondDecision::Accepted : DiamondDecision::Inconclusive;
}

std::set<std::string> quadrant_footprint(const Assembly& a) {
    std::set<std::string> out;
    for (const auto& [p, t] : a.placements()) {
        if (p.x == 0 || p.y == 0) continue;
        if (p.x > 0 && p.y > 0) out.insert("I");
        if (p.x < 0 && p.y > 0) out.insert("II");
        if (p.x < 0 && p.y < 0) out.insert("III");
        if (p.x > 0 && p.y < 0) out.insert("IV");
    }
    return out;
}

}  // namespace tam
