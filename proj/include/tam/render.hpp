#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tam/assembly.hpp"
#include "tam/geometry.hpp"

namespace tam {

enum class RenderFormat { Ascii, Ppm, Svg };

struct RenderSpec {
    Window window{{0, 0}, {15, 15}};
    std::uint32_t cell_size = 8;  // pixels per cell (ppm/svg)
    // marker class -> color; cells of unlisted marked classes use tile_color
    std::map<std::string, std::array<std::uint8_t, 3>> marker_colors;
    std::array<std::uint8_t, 3> tile_color = {60, 60, 60};
    std::array<std::uint8_t, 3> empty_color = {255, 255, 255};
    RenderFormat format = RenderFormat::Ascii;
    bool y_up = true;          // math convention (paper figures); flag flips
    std::uint64_t pixel_cap = 64ull * 1024 * 1024;
};

// Deterministic render of an assembly (markers colored per class).
std::string render(const Assembly& a, const TileSet& ts, const RenderSpec& spec);
// Point sets render as marked cells.
std::string render_points(const std::vector<Point>& pts, const RenderSpec& spec);

}  // namespace tam
