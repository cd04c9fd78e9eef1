#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tam {

enum class Move : std::uint8_t { Left, Right };

// Single-tape deterministic machine. delta must be total on live states;
// the head is assumed never to move left off cell 0 (checked dynamically by
// the interpreter and surfaced as an error).
struct TuringMachine {
    std::vector<std::string> states;
    std::vector<std::string> input_alphabet;
    std::vector<std::string> tape_alphabet;  // includes blank
    std::string blank = "_";
    std::string start, accept, reject;

    struct Action {
        std::string next_state;
        std::string write;
        Move move;
    };
    std::map<std::pair<std::string, std::string>, Action> delta;

    bool is_halting(const std::string& q) const { return q == accept || q == reject; }

    // throws std::invalid_argument when delta is partial on live states or
    // references unknown states/symbols
    void validate() const;
};

// Text format:
//   states: q0,q1,qA,qR
//   input: 0,1
//   tape: 0,1,_
//   blank: _          (optional; default "_")
//   start: q0
//   accept: qA
//   reject: qR
//   q0,0 -> q1,1,R
TuringMachine parse_tm(const std::string& text);
std::string tm_to_string(const TuringMachine& m);

// One machine configuration: tape cells 0..n-1 (cells beyond hold blanks),
// head position, and state.
struct TmConfig {
    std::vector<std::string> tape;
    std::size_t head = 0;
    std::string state;

    std::string cell(std::size_t i, const std::string& blank) const {
        return i < tape.size() ? tape[i] : blank;
    }
};

struct TmRun {
    std::vector<TmConfig> configs;  // configs[j] = after j steps
    bool halted = false;
    bool fell_off_left = false;
    std::string final_state;
};

// Direct interpreter; the oracle for wedge fidelity and compiled-system
// soundness checks. Never consulted by the compilers themselves.
TmRun run_tm(const TuringMachine& m, const std::vector<std::string>& input,
             std::size_t max_steps);

// Convenience for binary/unary string inputs over single-char symbols.
std::vector<std::string> string_input(const std::string& w);
// MSB-first binary encoding of n ("0" for zero).
std::string binary_string(std::uint64_t n);

}  // namespace tam
