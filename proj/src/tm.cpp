#include "tam/tm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tam {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        tok = trim(tok);
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

}  // namespace

void TuringMachine::validate() const {
    std::set<std::string> qs(states.begin(), states.end());
    std::set<std::string> syms(tape_alphabet.begin(), tape_alphabet.end());
    auto need_state = [&](const std::string& q, const char* role) {
        if (!qs.count(q))
            throw std::invalid_argument(std::string("machine: unknown ") + role + " state " + q);
    };
    need_state(start, "start");
    need_state(accept, "accept");
    need_state(reject, "reject");
    if (!syms.count(blank)) throw std::invalid_argument("machine: blank not in tape alphabet");
    for (const auto& s : input_alphabet)
        if (!syms.count(s))
            throw std::invalid_argument("machine: input symbol " + s + " not in tape alphabet");
    for (const auto& [key, act] : delta) {
        if (!qs.count(key.first) || !syms.count(key.second))
            throw std::invalid_argument("machine: transition from unknown (state,symbol)");
        if (!qs.count(act.next_state) || !syms.count(act.write))
            throw std::invalid_argument("machine: transition to unknown (state,symbol)");
    }
    for (const auto& q : states) {
        if (is_halting(q)) continue;
        for (const auto& a : tape_alphabet)
            if (!delta.count({q, a}))
                throw std::invalid_argument("machine: delta partial at (" + q + "," + a + ")");
    }
}

TuringMachine parse_tm(const std::string& text) {
    TuringMachine m;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto arrow = line.find("->");
        if (arrow != std::string::npos) {
            auto lhs = split_list(line.substr(0, arrow));
            auto rhs = split_list(line.substr(arrow + 2));
            if (lhs.size() != 2 || rhs.size() != 3)
                throw std::invalid_argument("machine: bad transition line: " + line);
            Move mv;
            if (rhs[2] == "L")
                mv = Move::Left;
            else if (rhs[2] == "R")
                mv = Move::Right;
            else
                throw std::invalid_argument("machine: bad move in: " + line);
            auto key = std::make_pair(lhs[0], lhs[1]);
            if (m.delta.count(key))
                throw std::invalid_argument("machine: duplicate transition for (" + lhs[0] + "," +
                                            lhs[1] + ")");
            m.delta[key] = {rhs[0], rhs[1], mv};
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("machine: bad line: " + line);
        std::string key = trim(line.substr(0, colon));
        std::string val = trim(line.substr(colon + 1));
        if (key == "states")
            m.states = split_list(val);
        else if (key == "input")
            m.input_alphabet = split_list(val);
        else if (key == "tape")
            m.tape_alphabet = split_list(val);
        else if (key == "blank")
            m.blank = val;
        else if (key == "start")
            m.start = val;
        else if (key == "accept")
            m.accept = val;
        else if (key == "reject")
            m.reject = val;
        else
            throw std::invalid_argument("machine: unknown header: " + key);
    }
    m.validate();
    return m;
}

std::string tm_to_string(const TuringMachine& m) {
    std::ostringstream os;
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += v[i];
        }
        return s;
    };
    os << "states: " << join(m.states) << "\n";
    os << "input: " << join(m.input_alphabet) << "\n";
    os << "tape: " << join(m.tape_alphabet) << "\n";
    os << "blank: " << m.blank << "\n";
    os << "start: " << m.start << "\n";
    os << "accept: " << m.accept << "\n";
    os << "reject: " << m.reject << "\n";
    for (const auto& [key, act] : m.delta)
        os << key.first << "," << key.second << " -> " << act.next_state << "," << act.write << ","
           << (act.move == Move::Left ? "L" : "R") << "\n";
    return os.str();
}

TmRun run_tm(const TuringMachine& m, const std::vector<std::string>& input,
             std::size_t max_steps) {
    TmRun run;
    TmConfig cfg;
    cfg.tape = input;
    cfg.head = 0;
    cfg.state = m.start;
    run.configs.push_back(cfg);
    for (std::size_t step = 0; step < max_steps; ++step) {
        if (m.is_halting(cfg.state)) {
            run.halted = true;
            break;
        }
        std::string sym = cfg.cell(cfg.head, m.blank);
        auto it = m.delta.find({cfg.state, sym});
        if (it == m.delta.end())
            throw std::logic_error("interpreter: missing transition at (" + cfg.state + "," + sym +
                                   ")");
        const auto& act = it->second;
        while (cfg.tape.size() <= cfg.head) cfg.tape.push_back(m.blank);
        cfg.tape[cfg.head] = act.write;
        cfg.state = act.next_state;
        if (act.move == Move::Left) {
            if (cfg.head == 0) {
                run.fell_off_left = true;
                break;
            }
            --cfg.head;
        } else {
            ++cfg.head;
        }
        run.configs.push_back(cfg);
    }
    if (!run.configs.empty() && m.is_halting(run.configs.back().state)) run.halted = true;
    run.final_state = run.configs.back().state;
    return run;
}

std::vector<std::string> string_input(const std::string& w) {
    std::vector<std::string> v;
    for (char c : w) v.emplace_back(1, c);
    return v;
}

std::string binary_string(std::uint64_t n) {
    if (n == 0) return "0";
    std::string s;
    while (n) {
        s += static_cast<char>('0' + (n & 1));
        n >>= 1;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace tam
