#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "tam/sim.hpp"
#include "tam/wedge.hpp"

using namespace tam;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string machine_path(const std::string& name) {
    return std::string(TAM_DATA_DIR) + "/machines/" + name + ".tm";
}

TuringMachine load(const std::string& name) { return parse_tm(slurp(machine_path(name))); }

// Drives the wedge and checks every decodable row against the interpreter.
void check_wedge_fidelity(const TuringMachine& m, const std::string& w, std::size_t steps) {
    std::vector<std::string> tape = string_input(w);
    WedgeSystem ws = compile_wedge(m, tape);
    TmRun oracle = run_tm(m, tape, steps);
    REQUIRE_FALSE(oracle.fell_off_left);

    std::int64_t m_len = static_cast<std::int64_t>(tape.size());
    std::int64_t rows = static_cast<std::int64_t>(oracle.configs.size());
    Window win{{-2, -2}, {m_len + rows + 4, rows + 1}};
    RunResult rr = run(ws.compiled.system, 1'000'000, win, 1234);

    for (std::int64_t j = 0; j < rows; ++j) {
        auto row = decode_row(ws, rr.assembly, j);
        REQUIRE_MESSAGE(row.has_value(), "row ", j, " missing for input '", w, "'");
        // geometry: row j has width m+1+j
        CHECK(static_cast<std::int64_t>(row->size()) == m_len + 1 + j);
        CHECK_FALSE(rr.assembly.occupied({m_len + 1 + j, j}));
        CHECK_MESSAGE(row_matches_config(*row, oracle.configs[static_cast<std::size_t>(j)],
                                         m.blank),
                      "row ", j, " mismatch for input '", w, "'");
    }
    if (oracle.halted) {
        // nothing grows above the halt row
        CHECK_FALSE(rr.assembly.occupied({0, rows}));
        CHECK(rr.status == RunStatus::Terminal);
    }
}

}  // namespace

TEST_CASE("tm parser and validation") {
    TuringMachine m = load("parity");
    CHECK(m.states.size() == 4);
    CHECK(m.delta.size() == 6);
    TuringMachine back = parse_tm(tm_to_string(m));
    CHECK(back.delta.size() == m.delta.size());

    // partial delta rejected
    CHECK_THROWS(parse_tm("states: a,qA,qR\ninput: 0\ntape: 0,_\nstart: a\naccept: qA\n"
                          "reject: qR\na,0 -> a,0,R\n"));
    // duplicate transition rejected
    CHECK_THROWS(parse_tm("states: a,qA,qR\ninput: 0\ntape: 0,_\nstart: a\naccept: qA\n"
                          "reject: qR\na,0 -> a,0,R\na,0 -> a,0,L\na,_ -> qA,_,R\n"));
}

TEST_CASE("interpreter runs the corpus") {
    TuringMachine parity = load("parity");
    for (std::uint64_t n = 0; n <= 12; ++n) {
        TmRun r = run_tm(parity, string_input(binary_string(n)), 200);
        REQUIRE(r.halted);
        CHECK((r.final_state == parity.accept) == (n % 2 == 0));
    }
    TuringMachine inc = load("increment");
    // LSB-first: "11" (3) -> "001" (4)
    TmRun r = run_tm(inc, string_input("11"), 50);
    REQUIRE(r.halted);
    CHECK(r.configs.back().tape == std::vector<std::string>{"0", "0", "1"});

    TuringMachine u2b = load("unary-to-binary");
    TmRun r5 = run_tm(u2b, string_input("11111"), 500);
    REQUIRE(r5.halted);
    // counter after '#': LSB-first 101 = 5
    auto tape = r5.configs.back().tape;
    std::size_t hash = 0;
    while (hash < tape.size() && tape[hash] != "#") ++hash;
    REQUIRE(hash < tape.size());
    std::uint64_t val = 0, bit = 1;
    for (std::size_t i = hash + 1; i < tape.size(); ++i) {
        if (tape[i] == "c1") val += bit;
        if (tape[i] == "c0" || tape[i] == "c1") bit <<= 1;
    }
    CHECK(val == 5);

    TuringMachine looper = load("looper");
    TmRun rl = run_tm(looper, string_input("01"), 100);
    CHECK_FALSE(rl.halted);
    CHECK(rl.configs.size() == 101);
}

TEST_CASE("wedge: immediate accept on empty input gives seed blank plus halt row") {
    TuringMachine m = load("always-accept");
    WedgeSystem ws = compile_wedge(m, {});
    RunResult rr = run(ws.compiled.system, 100, {{-2, -2}, {6, 6}}, 0);
    CHECK(rr.status == RunStatus::Terminal);
    CHECK(rr.assembly.size() == 3);  // 1 seed blank + 2-cell halt row
    auto row1 = decode_row(ws, rr.assembly, 1);
    REQUIRE(row1.has_value());
    CHECK(row1->size() == 2);
    bool has_halt = false;
    for (const auto& [p, t] : rr.assembly.placements())
        if (ws.compiled.system.tiles.is_marked("halt-accept", t)) has_halt = true;
    CHECK(has_halt);
}

TEST_CASE("wedge fidelity across the corpus (oracle: direct interpreter)") {
    check_wedge_fidelity(load("always-accept"), "", 50);
    check_wedge_fidelity(load("always-accept"), "01", 50);
    for (std::uint64_t n : {0ull, 1ull, 2ull, 3ull, 6ull, 9ull})
        check_wedge_fidelity(load("parity"), binary_string(n), 50);
    check_wedge_fidelity(load("increment"), "11", 50);
    check_wedge_fidelity(load("increment"), "1101", 50);
    check_wedge_fidelity(load("unary-to-binary"), "111", 50);
    check_wedge_fidelity(load("unary-to-binary"), "11111", 50);
    check_wedge_fidelity(load("looper"), "0", 50);
    check_wedge_fidelity(load("looper"), "010011", 50);
}

TEST_CASE("wedge rows reproduce the first rows on input 01") {
    // the canonical smoke example: four rows of a machine on input "01"
    TuringMachine m = load("parity");
    std::vector<std::string> tape = string_input("01");
    WedgeSystem ws = compile_wedge(m, tape);
    TmRun oracle = run_tm(m, tape, 4);
    RunResult rr = run(ws.compiled.system, 10000, {{-1, -1}, {12, 6}}, 7);
    for (std::int64_t j = 0; j < 4; ++j) {
        auto row = decode_row(ws, rr.assembly, j);
        REQUIRE(row.has_value());
        CHECK(row_matches_config(*row, oracle.configs[static_cast<std::size_t>(j)], m.blank));
    }
}

TEST_CASE("wedge systems are directed within bound and locally deterministic") {
    TuringMachine m = load("parity");
    WedgeSystem ws = compile_wedge(m, string_input("01"));
    auto dv = check_directed(ws.compiled.system, 12);
    CHECK(dv.directed);

    AssemblySequence seq(ws.compiled.system, 99);
    while (seq.step()) {
        if (seq.steps().size() > 4000) break;
    }
    auto rep = check_local_determinism(seq);
    CHECK_MESSAGE(rep.pass, rep.violation);
}

TEST_CASE("wedge replay: same seed, same history") {
    TuringMachine m = load("unary-to-binary");
    WedgeSystem ws = compile_wedge(m, string_input("1111"));
    Window win{{-2, -2}, {30, 30}};
    RunResult a = run(ws.compiled.system, 4000, win, 5);
    RunResult b = run(ws.compiled.system, 4000, win, 5);
    REQUIRE(a.assembly.history().size() == b.assembly.history().size());
    for (std::size_t i = 0; i < a.assembly.history().size(); ++i)
        CHECK(a.assembly.history()[i].pos == b.assembly.history()[i].pos);
}
