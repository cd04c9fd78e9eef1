#include "tam/wedge.hpp"

#include <set>
#include <stdexcept>

#include <json.hpp>

namespace tam {

std::string compiled_to_json(const CompiledSystem& cs) {
    nlohmann::json j = nlohmann::json::parse(tileset_to_json(cs.system.tiles));
    j["temperature"] = cs.system.temperature;
    nlohmann::json seed = nlohmann::json::array();
    for (const auto& pl : cs.system.seed.history())
        seed.push_back({pl.pos.x, pl.pos.y, cs.system.tiles[pl.tile].name});
    j["seed"] = std::move(seed);
    nlohmann::json layout = nlohmann::json::array();
    for (const auto& [role, pred] : cs.layout) layout.push_back({{"role", role}, {"map", pred}});
    j["layout"] = std::move(layout);
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : cs.params) params[k] = v;
    j["params"] = std::move(params);
    return j.dump(2);
}

namespace {

Glue g1(const std::string& c) { return {c, 1}; }
Glue g2(const std::string& c) { return {c, 2}; }

}  // namespace

WedgeSystem compile_wedge(const TuringMachine& m, const std::vector<std::string>& tape,
                          const WedgeOptions& opts) {
    m.validate();
    for (const auto& s : tape) {
        bool known = false;
        for (const auto& t : m.tape_alphabet) known = known || t == s;
        if (!known) throw std::invalid_argument("wedge: tape symbol not in alphabet: " + s);
    }

    WedgeSystem ws;
    ws.input_length = tape.size();
    TileSet& T = ws.compiled.system.tiles;
    auto& decode = ws.decode;

    // flavor of a row = emit label of the state its transition enters;
    // halting states are tagged with their verdict automatically
    auto flavor_of = [&](const std::string& q2) -> std::string {
        auto it = opts.emit_states.find(q2);
        if (it != opts.emit_states.end()) return it->second;
        if (q2 == m.accept) return "A";
        if (q2 == m.reject) return "R";
        return "";
    };
    auto live = [&](const std::string& q) { return !m.is_halting(q); };

    std::set<std::string> flavors{""};
    for (const auto& [key, act] : m.delta) flavors.insert(flavor_of(act.next_state));

    auto sym = [](const std::string& c) { return "s:" + c; };
    auto cR = [](const std::string& f) { return f.empty() ? "cR" : "cR!" + f; };
    auto gb = [](const std::string& f) { return f.empty() ? "gb" : "gb!" + f; };

    std::vector<TileIndex> halt_accept, halt_reject;
    auto mark_halt = [&](const std::string& q2, TileIndex idx) {
        if (q2 == m.accept) halt_accept.push_back(idx);
        if (q2 == m.reject) halt_reject.push_back(idx);
    };

    // fills and extender tiles, per flavor
    for (const auto& c : m.tape_alphabet) {
        TileIndex i = T.add(make_tile("cpl." + c, g1(sym(c)), g1("cL"), g1(sym(c)), g1("cL")));
        decode[i] = {c, std::nullopt};
    }
    for (const auto& f : flavors) {
        std::string suffix = f.empty() ? "" : "!" + f;
        for (const auto& c : m.tape_alphabet) {
            TileIndex i = T.add(make_tile("cpr." + c + suffix, g1(sym(c)), g1(cR(f)),
                                          g1(sym(c)), g1(cR(f))));
            decode[i] = {c, std::nullopt};
        }
        TileIndex gi = T.add(
            make_tile("gb" + suffix, g1(sym(m.blank)), g2(gb(f)), g1("ext"), g1(cR(f))));
        decode[gi] = {m.blank, std::nullopt};
        Glue fb_east = f.empty() ? g1("sky") : g2("emit:" + f);
        TileIndex fi = T.add(make_tile("fb" + suffix, g1("ext"), fb_east, g1("fbs"), g2(gb(f))));
        decode[fi] = {m.blank, std::nullopt};
    }

    // per-transition action tiles
    std::set<std::pair<std::string, std::string>> right_landers, left_landers;  // (q2, f)
    std::set<std::pair<std::string, std::string>> edge_right;                   // via hRE
    for (const auto& [key, act] : m.delta) {
        const auto& [q, a] = key;
        const std::string& q2 = act.next_state;
        std::string f = flavor_of(q2);
        std::string fs = f.empty() ? "" : "!" + f;
        std::string hR = "hR:" + q2 + fs, hL = "hL:" + q2 + fs;
        // interior action
        {
            std::string name = "act." + q + "." + a + (act.move == Move::Right ? ".R" : ".L");
            TileIndex i;
            if (act.move == Move::Right)
                i = T.add(make_tile(name, g1(sym(act.write)), g1(hR), g2("A:" + q + ":" + a),
                                    g1("cL")));
            else
                i = T.add(make_tile(name, g1(sym(act.write)), g1(cR(f)), g2("A:" + q + ":" + a),
                                    g1(hL)));
            decode[i] = {act.write, std::nullopt};
        }
        if (act.move == Move::Right)
            right_landers.insert({q2, f});
        else
            left_landers.insert({q2, f});
        // action on the trailing blank
        if (a == m.blank) {
            std::string name = "actE." + q + (act.move == Move::Right ? ".R" : ".L");
            TileIndex i;
            if (act.move == Move::Right) {
                i = T.add(make_tile(name, g1(sym(act.write)), g2("hRE:" + q2 + fs),
                                    g2("AE:" + q), g1("cL")));
                edge_right.insert({q2, f});
            } else {
                i = T.add(
                    make_tile(name, g1(sym(act.write)), g2(gb(f)), g2("AE:" + q), g1(hL)));
            }
            decode[i] = {act.write, std::nullopt};
        }
    }

    // head tiles
    for (const auto& [q2, f] : right_landers) {
        std::string fs = f.empty() ? "" : "!" + f;
        for (const auto& c : m.tape_alphabet) {
            Glue north = live(q2) ? g2("A:" + q2 + ":" + c) : g1("hx");
            TileIndex i = T.add(make_tile("hdR." + q2 + "." + c + fs, north, g1(cR(f)),
                                          g1(sym(c)), g1("hR:" + q2 + fs)));
            decode[i] = {c, q2};
            if (!live(q2)) mark_halt(q2, i);
        }
        // landing on the old trailing-blank column; spawns a fresh trailing
        // cell to its right, so the head is interior in its own row
        Glue north = live(q2) ? g2("A:" + q2 + ":" + m.blank) : g1("hx");
        TileIndex i = T.add(
            make_tile("hdRE." + q2 + fs, north, g2(gb(f)), g1("ext"), g1("hR:" + q2 + fs)));
        decode[i] = {m.blank, q2};
        if (!live(q2)) mark_halt(q2, i);
    }
    for (const auto& [q2, f] : left_landers) {
        std::string fs = f.empty() ? "" : "!" + f;
        for (const auto& c : m.tape_alphabet) {
            Glue north = live(q2) ? g2("A:" + q2 + ":" + c) : g1("hx");
            TileIndex i = T.add(make_tile("hdL." + q2 + "." + c + fs, north,
                                          g1("hL:" + q2 + fs), g1(sym(c)), g1("cL")));
            decode[i] = {c, q2};
            if (!live(q2)) mark_halt(q2, i);
        }
    }
    for (const auto& [q2, f] : edge_right) {
        std::string fs = f.empty() ? "" : "!" + f;
        Glue north = live(q2) ? g2("AE:" + q2) : g1("hx");
        TileIndex i = T.add(make_tile("hdEE." + q2 + fs, north, g1("sky"), g1("x0"),
                                      g2("hRE:" + q2 + fs)));
        decode[i] = {m.blank, q2};
        if (!live(q2)) mark_halt(q2, i);
    }

    // seed row
    Glue seed_s = opts.seed_south_color.empty() ? null_glue() : g1(opts.seed_south_color);
    Glue seed_hs = opts.seed_head_south.empty() ? seed_s : g1(opts.seed_head_south);
    Glue cap_e = opts.seed_cap_east.empty() ? null_glue() : g1(opts.seed_cap_east);
    Assembly& seed = ws.compiled.system.seed;
    if (tape.empty()) {
        TileIndex i =
            T.add(make_tile("seed.headE", g2("AE:" + m.start), cap_e, seed_hs, null_glue()));
        decode[i] = {m.blank, m.start};
        seed.place({0, 0}, i);
    } else {
        TileIndex h = T.add(make_tile("seed.head", g2("A:" + m.start + ":" + tape[0]), g2("sd"),
                                      seed_hs, null_glue()));
        decode[h] = {tape[0], m.start};
        seed.place({0, 0}, h);
        for (std::size_t x = 1; x < tape.size(); ++x) {
            std::string name = "seed." + std::to_string(x);
            TileIndex i = T.add(make_tile(name, g1(sym(tape[x])), g2("sd"), seed_s, g2("sd")));
            decode[i] = {tape[x], std::nullopt};
            seed.place({static_cast<std::int64_t>(x), 0}, i);
        }
        TileIndex fb = T.add(make_tile("seed.fb", g1("ext"), cap_e, seed_s, g2("sd")));
        decode[fb] = {m.blank, std::nullopt};
        seed.place({static_cast<std::int64_t>(tape.size()), 0}, fb);
    }

    T.set_marker_class("halt-accept", halt_accept);
    T.set_marker_class("halt-reject", halt_reject);

    ws.compiled.system.temperature = 2;
    ws.compiled.note("config-row j", "y = j, cells x in [0, m+j]");
    ws.compiled.params["input_length"] = static_cast<std::int64_t>(tape.size());
    return ws;
}

std::optional<std::vector<WedgeCell>> decode_row(const WedgeSystem& ws, const Assembly& a,
                                                 std::int64_t j) {
    std::int64_t width = static_cast<std::int64_t>(ws.input_length) + 1 + j;
    std::vector<WedgeCell> row;
    for (std::int64_t x = 0; x < width; ++x) {
        auto t = a.at({x, j});
        if (!t) return std::nullopt;
        auto it = ws.decode.find(*t);
        if (it == ws.decode.end()) return std::nullopt;
        row.push_back(it->second);
    }
    return row;
}

bool row_matches_config(const std::vector<WedgeCell>& row, const TmConfig& cfg,
                        const std::string& blank) {
    for (std::size_t x = 0; x < row.size(); ++x) {
        if (row[x].symbol != cfg.cell(x, blank)) return false;
        bool head_here = cfg.head == x;
        if (head_here != row[x].state.has_value()) return false;
        if (head_here && *row[x].state != cfg.state) return false;
    }
    // the head must lie inside the row
    return cfg.head < row.size();
}

}  // namespace tam
