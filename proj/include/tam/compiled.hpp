#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tam/assembly.hpp"

namespace tam {

// A compiled tile system plus layout metadata binding construction roles to
// coordinates (so verifiers can find rows, answers, markers).
struct CompiledSystem {
    TileAssemblySystem system;
    // role -> coordinate predicate, human readable ("answer n -> (n,0)")
    std::vector<std::pair<std::string, std::string>> layout;
    // named integer parameters used by the predicates (origins, lengths)
    std::map<std::string, std::int64_t> params;

    void note(std::string role, std::string predicate) {
        layout.emplace_back(std::move(role), std::move(predicate));
    }
};

// Serialization: the tileset JSON plus a "layout" section.
std::string compiled_to_json(const CompiledSystem& cs);

}  // namespace tam
