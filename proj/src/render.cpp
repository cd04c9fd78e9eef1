#include "tam/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace tam {

namespace {

struct CellLookup {
    const Assembly* a = nullptr;
    const TileSet* ts = nullptr;
    const std::unordered_set<Point, PointHash>* pts = nullptr;
};

std::string render_impl(const CellLookup& look, const RenderSpec& spec) {
    const Window& w = spec.window;
    if (!w.valid()) throw std::invalid_argument("render: empty window");
    if (static_cast<std::uint64_t>(w.area()) * spec.cell_size * spec.cell_size > spec.pixel_cap)
        throw std::length_error("render: window exceeds pixel cap");

    // marker resolution for assemblies: first matching class in map order
    auto color_of = [&](const Point& p, bool& present) -> std::array<std::uint8_t, 3> {
        present = false;
        if (look.pts) {
            if (look.pts->count(p)) {
                present = true;
                return spec.tile_color;
            }
            return spec.empty_color;
        }
        auto t = look.a->at(p);
        if (!t) return spec.empty_color;
        present = true;
        for (const auto& [cls, col] : spec.marker_colors)
            if (look.ts->is_marked(cls, *t)) return col;
        return spec.tile_color;
    };

    std::vector<std::int64_t> rows;
    if (spec.y_up)
        for (std::int64_t y = w.hi.y; y >= w.lo.y; --y) rows.push_back(y);
    else
        for (std::int64_t y = w.lo.y; y <= w.hi.y; ++y) rows.push_back(y);

    if (spec.format == RenderFormat::Ascii) {
        std::ostringstream os;
        for (std::int64_t y : rows) {
            for (std::int64_t x = w.lo.x; x <= w.hi.x; ++x) {
                bool present;
                auto col = color_of({x, y}, present);
                if (!present)
                    os << '.';
                else if (col == spec.tile_color)
                    os << '#';
                else
                    os << '@';
            }
            os << '\n';
        }
        return os.str();
    }

    if (spec.format == RenderFormat::Ppm) {
        std::uint64_t pw = static_cast<std::uint64_t>(w.width()) * spec.cell_size;
        std::uint64_t ph = static_cast<std::uint64_t>(w.height()) * spec.cell_size;
        std::ostringstream os;
        os << "P6\n" << pw << " " << ph << "\n255\n";
        for (std::size_t ry = 0; ry < rows.size(); ++ry) {
            std::string line;
            line.reserve(pw * 3);
            for (std::int64_t x = w.lo.x; x <= w.hi.x; ++x) {
                bool present;
                auto col = color_of({x, rows[ry]}, present);
                for (std::uint32_t k = 0; k < spec.cell_size; ++k) {
                    line += static_cast<char>(col[0]);
                    line += static_cast<char>(col[1]);
                    line += static_cast<char>(col[2]);
                }
            }
            for (std::uint32_t k = 0; k < spec.cell_size; ++k) os << line;
        }
        return os.str();
    }

    // SVG 1.1 subset: rect elements only
    std::ostringstream os;
    std::int64_t pw = w.width() * spec.cell_size, ph = w.height() * spec.cell_size;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pw << "\" height=\"" << ph
       << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << pw << "\" height=\"" << ph << "\" fill=\"rgb("
       << int(spec.empty_color[0]) << "," << int(spec.empty_color[1]) << ","
       << int(spec.empty_color[2]) << ")\"/>\n";
    for (std::size_t ry = 0; ry < rows.size(); ++ry) {
        for (std::int64_t x = w.lo.x; x <= w.hi.x; ++x) {
            bool present;
            auto col = color_of({x, rows[ry]}, present);
            if (!present) continue;
            os << "<rect x=\"" << (x - w.lo.x) * spec.cell_size << "\" y=\""
               << static_cast<std::int64_t>(ry) * spec.cell_size << "\" width=\"" << spec.cell_size
               << "\" height=\"" << spec.cell_size << "\" fill=\"rgb(" << int(col[0]) << ","
               << int(col[1]) << "," << int(col[2]) << ")\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string render(const Assembly& a, const TileSet& ts, const RenderSpec& spec) {
    CellLookup look;
    look.a = &a;
    look.ts = &ts;
    return render_impl(look, spec);
}

std::string render_points(const std::vector<Point>& pts, const RenderSpec& spec) {
    std::unordered_set<Point, PointHash> set(pts.begin(), pts.end());
    CellLookup look;
    look.pts = &set;
    return render_impl(look, spec);
}

}  // namespace tam
