#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tam/compiled.hpp"
#include "tam/tm.hpp"

namespace tam {

// Decoded content of one wedge cell: a tape symbol, optionally with the
// head state sitting on it.
struct WedgeCell {
    std::string symbol;
    std::optional<std::string> state;
};

struct WedgeOptions {
    // Rows whose transition enters one of these states carry the tag on
    // their rightward fill; the row's trailing blank then exposes a
    // strength-2 "emit:<label>" glue on its east side. Used by the stacked
    // constructions; empty for a plain simulation.
    std::map<std::string, std::string> emit_states;  // state -> label
    // Seed-row decorations (south/east faces stay null when empty).
    std::string seed_south_color;  // strength 1 when set
    std::string seed_cap_east;     // on the seed row's trailing blank
    std::string seed_head_south;   // distinct south for the cell-0 seed tile
};

struct WedgeSystem {
    CompiledSystem compiled;
    std::map<TileIndex, WedgeCell> decode;  // tile -> cell content
    std::size_t input_length = 0;           // m: seed row covers 0..m
};

// The temperature-2 row-per-configuration simulation: the seed row encodes
// the initial configuration with one trailing blank; row j encodes the
// configuration after j steps and is one cell wider than row j-1. Halting
// rows carry a marker tile with the final state; nothing grows above them.
// Marker classes "halt-accept"/"halt-reject" name those tiles.
//
// Throws std::invalid_argument when delta is partial on live states.
WedgeSystem compile_wedge(const TuringMachine& m, const std::vector<std::string>& tape,
                          const WedgeOptions& opts = {});

// Reads row j of an assembly produced by a wedge system; nullopt if the row
// is absent or incomplete.
std::optional<std::vector<WedgeCell>> decode_row(const WedgeSystem& ws, const Assembly& a,
                                                 std::int64_t j);

// Compares a decoded row against an interpreter configuration.
bool row_matches_config(const std::vector<WedgeCell>& row, const TmConfig& cfg,
                        const std::string& blank);

}  // namespace tam
