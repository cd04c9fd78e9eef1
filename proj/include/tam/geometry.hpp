#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>

namespace tam {

// Lattice point in Z^2. Constructions live in all four quadrants and
// windows can sit far from the origin, so coordinates are 64-bit.
struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    }
    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    Point scaled(std::int64_t k) const { return {x * k, y * k}; }
};

// The four unit vectors of Z^2. Negation maps N<->S and E<->W.
enum class Dir : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

constexpr std::array<Dir, 4> kDirs = {Dir::North, Dir::East, Dir::South, Dir::West};

constexpr Dir opposite(Dir d) {
    switch (d) {
        case Dir::North: return Dir::South;
        case Dir::East: return Dir::West;
        case Dir::South: return Dir::North;
        case Dir::West: return Dir::East;
    }
    return Dir::North;
}

inline Point unit_vector(Dir d) {
    switch (d) {
        case Dir::North: return {0, 1};
        case Dir::East: return {1, 0};
        case Dir::South: return {0, -1};
        case Dir::West: return {-1, 0};
    }
    return {0, 0};
}

inline Point neighbor(const Point& p, Dir d) { return p + unit_vector(d); }

inline const char* dir_name(Dir d) {
    switch (d) {
        case Dir::North: return "north";
        case Dir::East: return "east";
        case Dir::South: return "south";
        case Dir::West: return "west";
    }
    return "?";
}

// Inclusive axis-aligned rectangle used to truncate infinite assemblies.
struct Window {
    Point lo;
    Point hi;

    bool valid() const { return lo.x <= hi.x && lo.y <= hi.y; }
    bool contains(const Point& p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
    }
    std::int64_t width() const { return hi.x - lo.x + 1; }
    std::int64_t height() const { return hi.y - lo.y + 1; }
    std::int64_t area() const { return width() * height(); }
};

struct PointHash {
    std::size_t operator()(const Point& p) const noexcept {
        // splitmix64 finaliser over the packed coordinates
        std::uint64_t v = static_cast<std::uint64_t>(p.x) * 0x9e3779b97f4a7c15ULL ^
                          (static_cast<std::uint64_t>(p.y) + 0xbf58476d1ce4e5b9ULL);
        v ^= v >> 30;
        v *= 0xbf58476d1ce4e5b9ULL;
        v ^= v >> 27;
        v *= 0x94d049bb133111ebULL;
        v ^= v >> 31;
        return static_cast<std::size_t>(v);
    }
};

inline std::string to_string(const Point& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace tam
