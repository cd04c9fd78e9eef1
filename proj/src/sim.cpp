#include "tam/sim.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_set>

namespace tam {

AssemblySequence::AssemblySequence(const TileAssemblySystem& sys, std::uint64_t seed)
    : sys_(&sys), seed_(seed), rng_(seed) {
    for (const auto& pl : sys.seed.history()) asm_.place(pl.pos, pl.tile);
    // seed the frontier from every empty neighbour of the seed
    std::unordered_set<Point, PointHash> cand;
    for (const auto& [p, t] : asm_.placements())
        for (Dir d : kDirs) {
            Point q = neighbor(p, d);
            if (!asm_.occupied(q)) cand.insert(q);
        }
    for (const Point& p : cand) recompute_site(p);
}

void AssemblySequence::recompute_site(const Point& p) {
    // gather candidate tiles from the per-glue buckets of the occupied
    // neighbours, then keep those reaching the temperature
    const TileSet& ts = sys_->tiles;
    std::vector<TileIndex> cands;
    for (Dir d : kDirs) {
        auto q = asm_.at(neighbor(p, d));
        if (!q) continue;
        const Glue& g = ts[*q].side(opposite(d));
        if (g.strength == 0) continue;
        for (TileIndex c : ts.candidates(d, g)) cands.push_back(c);
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<TileIndex> attachable;
    for (TileIndex c : cands)
        if (attachment_strength(asm_, ts, p, ts[c]) >= sys_->temperature) attachable.push_back(c);
    if (attachable.empty()) {
        sites_.erase(p);
        site_age_.erase(p);
    } else {
        sites_[p] = std::move(attachable);
        site_age_.emplace(p, ticks_);  // keeps the oldest tick if already present
    }
}

void AssemblySequence::after_place(const Point& p) {
    sites_.erase(p);
    site_age_.erase(p);
    for (Dir d : kDirs) {
        Point q = neighbor(p, d);
        if (!asm_.occupied(q)) recompute_site(q);
    }
}

std::vector<FrontierSite> AssemblySequence::frontier() const {
    std::vector<FrontierSite> out;
    for (const auto& [p, tiles] : sites_)
        for (TileIndex t : tiles)
            out.push_back({p, t, attachment_strength(asm_, sys_->tiles, p, sys_->tiles[t])});
    std::sort(out.begin(), out.end());
    return out;
}

bool AssemblySequence::frontier_empty() const { return sites_.empty(); }

std::vector<FrontierSite> AssemblySequence::frontier_in(const Window& w) const {
    std::vector<FrontierSite> out;
    for (const auto& [p, tiles] : sites_) {
        if (!w.contains(p)) continue;
        for (TileIndex t : tiles)
            out.push_back({p, t, attachment_strength(asm_, sys_->tiles, p, sys_->tiles[t])});
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool AssemblySequence::step() {
    if (sites_.empty()) return false;
    ++ticks_;

    Point pick_point;
    bool forced = false;
    if (ticks_ % 64 == 0) {
        // fairness: force the oldest site so nothing starves
        std::uint64_t best_age = UINT64_MAX;
        for (const auto& [p, age] : site_age_) {
            if (age < best_age || (age == best_age && p < pick_point)) {
                best_age = age;
                pick_point = p;
            }
        }
        forced = true;
    }
    if (!forced) {
        // uniform over (site, tile) pairs; deterministic order for replay
        std::vector<FrontierSite> all = frontier();
        const FrontierSite& s = all[rng_.below(all.size())];
        asm_.place(s.pos, s.tile);
        steps_.push_back({s.pos, s.tile});
        after_place(s.pos);
        return true;
    }
    const auto& tiles = sites_.at(pick_point);
    TileIndex t = tiles[rng_.below(tiles.size())];
    asm_.place(pick_point, t);
    steps_.push_back({pick_point, t});
    after_place(pick_point);
    return true;
}

void AssemblySequence::apply(const FrontierSite& site) {
    auto it = sites_.find(site.pos);
    if (it == sites_.end() ||
        std::find(it->second.begin(), it->second.end(), site.tile) == it->second.end())
        throw std::logic_error("apply: not a frontier site");
    ++ticks_;
    asm_.place(site.pos, site.tile);
    steps_.push_back({site.pos, site.tile});
    after_place(site.pos);
}

const char* run_status_name(RunStatus s) {
    switch (s) {
        case RunStatus::Terminal: return "terminal";
        case RunStatus::BudgetExhausted: return "budget-exhausted";
        case RunStatus::WindowQuiescent: return "window-filled";
    }
    return "?";
}

RunResult run(const TileAssemblySystem& sys, std::uint64_t budget, const Window& window,
              std::uint64_t seed) {
    AssemblySequence seq(sys, seed);
    std::uint64_t steps = 0;
    while (true) {
        if (seq.frontier_empty())
            return {seq.assembly(), RunStatus::Terminal, steps, seed};
        if (seq.frontier_in(window).empty())
            return {seq.assembly(), RunStatus::WindowQuiescent, steps, seed};
        if (steps >= budget)
            return {seq.assembly(), RunStatus::BudgetExhausted, steps, seed};
        seq.step();
        ++steps;
    }
}

std::vector<Point> enumerate_marked(const TileAssemblySystem& sys, const std::string& marker_class,
                                    std::uint64_t seed, std::uint64_t budget,
                                    const std::function<bool(const Point&)>& emit) {
    auto it = sys.tiles.marker_classes().find(marker_class);
    std::unordered_set<TileIndex> marked;
    if (it != sys.tiles.marker_classes().end())
        marked.insert(it->second.begin(), it->second.end());

    std::vector<Point> out;
    AssemblySequence seq(sys, seed);
    // seed placements count: marked seed tiles are emitted up front
    for (const auto& pl : sys.seed.history())
        if (marked.count(pl.tile)) {
            out.push_back(pl.pos);
            if (emit && !emit(pl.pos)) return out;
        }
    for (std::uint64_t i = 0; i < budget; ++i) {
        if (!seq.step()) break;
        const auto& last = seq.steps().back();
        if (marked.count(last.tile)) {
            out.push_back(last.pos);
            if (emit && !emit(last.pos)) return out;
        }
    }
    return out;
}

namespace {

std::uint64_t assembly_key(const Assembly& a) {
    std::vector<Assembly::Placement> pls(a.history());
    std::sort(pls.begin(), pls.end(), [](const auto& l, const auto& r) {
        if (l.pos != r.pos) return l.pos < r.pos;
        return l.tile < r.tile;
    });
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 0x100000001b3ULL;
    };
    for (const auto& pl : pls) {
        mix(static_cast<std::uint64_t>(pl.pos.x));
        mix(static_cast<std::uint64_t>(pl.pos.y));
        mix(pl.tile);
    }
    return h;
}

}  // namespace

ExploreResult explore_all(const TileAssemblySystem& sys, std::size_t max_tiles,
                          std::size_t state_cap) {
    ExploreResult res;
    std::unordered_set<std::uint64_t> seen;

    struct Node {
        Assembly asm_;
    };
    std::queue<Assembly> work;
    Assembly start;
    for (const auto& pl : sys.seed.history()) start.place(pl.pos, pl.tile);
    seen.insert(assembly_key(start));
    work.push(start);

    auto frontier_of = [&](const Assembly& a) {
        std::vector<FrontierSite> sites;
        std::unordered_set<Point, PointHash> cand;
        for (const auto& [p, t] : a.placements())
            for (Dir d : kDirs) {
                Point q = neighbor(p, d);
                if (!a.occupied(q)) cand.insert(q);
            }
        for (const Point& p : cand) {
            std::vector<TileIndex> cands;
            for (Dir d : kDirs) {
                auto q = a.at(neighbor(p, d));
                if (!q) continue;
                const Glue& g = sys.tiles[*q].side(opposite(d));
                if (g.strength == 0) continue;
                for (TileIndex c : sys.tiles.candidates(d, g)) cands.push_back(c);
            }
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            for (TileIndex c : cands) {
                std::uint32_t s = attachment_strength(a, sys.tiles, p, sys.tiles[c]);
                if (s >= sys.temperature) sites.push_back({p, c, s});
            }
        }
        return sites;
    };

    while (!work.empty()) {
        Assembly a = std::move(work.front());
        work.pop();
        auto sites = frontier_of(a);
        bool expandable = false;
        if (a.size() < max_tiles) {
            for (const auto& s : sites) {
                Assembly b = a;
                b.place(s.pos, s.tile);
                if (seen.insert(assembly_key(b)).second) {
                    if (seen.size() > state_cap)
                        throw std::runtime_error("explore_all: state cap exceeded");
                    work.push(std::move(b));
                }
                expandable = true;
            }
        }
        if (sites.empty()) res.terminal.push_back(res.assemblies.size());
        (void)expandable;
        res.assemblies.push_back(std::move(a));
    }
    return res;
}

DirectedVerdict check_directed(const TileAssemblySystem& sys, std::size_t max_tiles) {
    DirectedVerdict v;
    ExploreResult ex = explore_all(sys, max_tiles);
    // pairwise consistency: never two different tiles at one point
    std::unordered_map<Point, TileIndex, PointHash> agreed;
    std::unordered_map<Point, std::size_t, PointHash> first_owner;
    for (std::size_t i = 0; i < ex.assemblies.size(); ++i) {
        for (const auto& [p, t] : ex.assemblies[i].placements()) {
            auto it = agreed.find(p);
            if (it == agreed.end()) {
                agreed.emplace(p, t);
                first_owner.emplace(p, i);
            } else if (it->second != t) {
                v.directed = false;
                v.reason = "conflicting tiles at " + to_string(p);
                v.witness = {ex.assemblies[first_owner.at(p)], ex.assemblies[i]};
                return v;
            }
        }
    }
    // all bound-terminal assemblies must coincide
    for (std::size_t i = 1; i < ex.terminal.size(); ++i) {
        const Assembly& a = ex.assemblies[ex.terminal[0]];
        const Assembly& b = ex.assemblies[ex.terminal[i]];
        if (!(a == b)) {
            v.directed = false;
            v.reason = "distinct terminal assemblies within bound";
            v.witness = {a, b};
            return v;
        }
    }
    return v;
}

LocalDeterminismReport check_local_determinism(const AssemblySequence& seq) {
    LocalDeterminismReport rep;
    const TileAssemblySystem& sys = seq.system();
    const TileSet& ts = sys.tiles;
    const Assembly& final_asm = seq.assembly();

    // replay to know the partial assembly at each placement time
    Assembly partial;
    for (const auto& pl : sys.seed.history()) partial.place(pl.pos, pl.tile);

    for (const auto& st : seq.steps()) {
        const TileType& t = ts[st.tile];
        std::uint32_t total = 0;
        std::vector<Dir> input_sides;
        for (Dir d : kDirs) {
            auto q = partial.at(neighbor(st.pos, d));
            if (!q) continue;
            std::uint32_t w = bond_strength(t, ts[*q], d);
            if (w > 0) {
                total += w;
                input_sides.push_back(d);
            }
        }
        if (total != sys.temperature) {
            rep.pass = false;
            rep.where = st.pos;
            rep.violation = "tile '" + t.name + "' at " + to_string(st.pos) +
                            " bound with strength " + std::to_string(total) + " != tau";
            return rep;
        }
        // condition (ii): no other type reaches tau at this point using only
        // the designated input sides, measured against the final assembly
        for (TileIndex other = 0; other < ts.size(); ++other) {
            if (other == st.tile) continue;
            std::uint32_t s = 0;
            for (Dir d : input_sides) {
                auto q = final_asm.at(neighbor(st.pos, d));
                if (q) s += bond_strength(ts[other], ts[*q], d);
            }
            if (s >= sys.temperature) {
                rep.pass = false;
                rep.where = st.pos;
                rep.violation = "tile '" + ts[other].name + "' also binds at " + to_string(st.pos);
                return rep;
            }
        }
        partial.place(st.pos, st.tile);
    }
    return rep;
}

}  // namespace tam
