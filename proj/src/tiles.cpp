#include "tam/tiles.hpp"

#include <json.hpp>

namespace tam {

using nlohmann::json;

namespace {

Glue glue_from_json(const json& j, const std::string& tile, const char* side) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_number_integer())
        throw std::invalid_argument("tile '" + tile + "': side '" + side +
                                    "' must be [color, strength]");
    auto strength = j[1].get<std::int64_t>();
    if (strength < 0)
        throw std::invalid_argument("tile '" + tile + "': negative strength on " + side);
    return Glue{j[0].get<std::string>(), static_cast<std::uint32_t>(strength)};
}

}  // namespace

TileSet parse_tileset_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("tiles") || !j["tiles"].is_array())
        throw std::invalid_argument("tileset: missing 'tiles' array");
    TileSet ts;
    for (const auto& jt : j["tiles"]) {
        if (!jt.contains("name")) throw std::invalid_argument("tileset: tile without name");
        std::string name = jt["name"].get<std::string>();
        TileType t;
        t.name = name;
        for (Dir d : kDirs) {
            const char* side = dir_name(d);
            if (!jt.contains(side))
                throw std::invalid_argument("tile '" + name + "': missing side " + side);
            t.side(d) = glue_from_json(jt[side], name, side);
        }
        ts.add(std::move(t));
    }
    if (j.contains("markers")) {
        for (auto it = j["markers"].begin(); it != j["markers"].end(); ++it) {
            std::vector<TileIndex> members;
            for (const auto& n : it.value()) {
                auto idx = ts.find(n.get<std::string>());
                if (!idx)
                    throw std::invalid_argument("marker class '" + it.key() +
                                                "': unknown tile " + n.get<std::string>());
                members.push_back(*idx);
            }
            ts.set_marker_class(it.key(), std::move(members));
        }
    }
    return ts;
}

std::string tileset_to_json(const TileSet& ts) {
    json j;
    j["tiles"] = json::array();
    for (const auto& t : ts.types()) {
        json jt;
        jt["name"] = t.name;
        for (Dir d : kDirs)
            jt[dir_name(d)] = json::array({t.side(d).color, t.side(d).strength});
        j["tiles"].push_back(std::move(jt));
    }
    json jm = json::object();
    for (const auto& [cls, members] : ts.marker_classes()) {
        json names = json::array();
        for (TileIndex i : members) names.push_back(ts[i].name);
        jm[cls] = std::move(names);
    }
    j["markers"] = std::move(jm);
    return j.dump(2);
}

}  // namespace tam
