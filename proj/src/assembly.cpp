#include "tam/assembly.hpp"

#include <sstream>

namespace tam {

std::string snapshot(const Assembly& a, const TileSet& ts) {
    std::ostringstream os;
    for (const auto& pl : a.history())
        os << pl.pos.x << ' ' << pl.pos.y << ' ' << ts[pl.tile].name << '\n';
    return os.str();
}

Assembly parse_snapshot(const std::string& text, const TileSet& ts) {
    Assembly a;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::int64_t x, y;
        std::string name;
        if (!(ls >> x >> y >> name))
            throw std::invalid_argument("snapshot line " + std::to_string(lineno) + ": bad format");
        auto idx = ts.find(name);
        if (!idx)
            throw std::invalid_argument("snapshot line " + std::to_string(lineno) +
                                        ": unknown tile " + name);
        a.place({x, y}, *idx);
    }
    return a;
}

}  // namespace tam
