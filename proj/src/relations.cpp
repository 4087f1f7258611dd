#include "placer/relations.hpp"

#include <array>
#include <cmath>

namespace placer {

namespace {

constexpr std::array<Relation, 9> kTableRegions = {
    Relation::LeftPart,         Relation::RightPart,       Relation::TopPart,
    Relation::BottomPart,       Relation::Middle,          Relation::TopLeftCorner,
    Relation::TopRightCorner,   Relation::BottomLeftCorner, Relation::BottomRightCorner,
};

constexpr std::array<Relation, 8> kObjectDirs = {
    Relation::Left,      Relation::Right,      Relation::Front,      Relation::Behind,
    Relation::FrontLeft, Relation::FrontRight, Relation::BehindLeft, Relation::BehindRight,
};

constexpr std::array<std::string_view, 17> kNames = {
    "left part",
    "right part",
    "top part",
    "bottom part",
    "middle",
    "top left corner",
    "top right corner",
    "bottom left corner",
    "bottom right corner",
    "left",
    "right",
    "front",
    "behind",
    "front left",
    "front right",
    "behind left",
    "behind right",
};

} // namespace

bool is_table_region(Relation r) {
    return static_cast<int>(r) <= static_cast<int>(Relation::BottomRightCorner);
}

bool is_object_dir(Relation r) { return !is_table_region(r); }

std::span<const Relation> table_regions() { return kTableRegions; }

std::span<const Relation> object_dirs() { return kObjectDirs; }

std::string_view relation_name(Relation r) { return kNames[static_cast<int>(r)]; }

std::optional<Relation> relation_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) return static_cast<Relation>(i);
    }
    return std::nullopt;
}

Vec2 direction_vector(Relation r) {
    constexpr double s = 0.70710678118654752440; // 1/sqrt(2)
    switch (r) {
        case Relation::Left: return {-1.0, 0.0};
        case Relation::Right: return {1.0, 0.0};
        case Relation::Front: return {0.0, -1.0};
        case Relation::Behind: return {0.0, 1.0};
        case Relation::FrontLeft: return {-s, -s};
        case Relation::FrontRight: return {s, -s};
        case Relation::BehindLeft: return {-s, s};
        case Relation::BehindRight: return {s, s};
        default: break;
    }
    return {0.0, 0.0}; // table regions carry no direction
}

AABB region_bounds(Relation r, const Workspace& ws) {
    // Column and row of the 3x3 partition: col 0 = left, row 0 = bottom
    // (toward the viewer), row 2 = top (away from the viewer).
    int col = 1;
    int row = 1;
    switch (r) {
        case Relation::LeftPart: col = 0; row = 1; break;
        case Relation::RightPart: col = 2; row = 1; break;
        case Relation::TopPart: col = 1; row = 2; break;
        case Relation::BottomPart: col = 1; row = 0; break;
        case Relation::Middle: col = 1; row = 1; break;
        case Relation::TopLeftCorner: col = 0; row = 2; break;
        case Relation::TopRightCorner: col = 2; row = 2; break;
        case Relation::BottomLeftCorner: col = 0; row = 0; break;
        case Relation::BottomRightCorner: col = 2; row = 0; break;
        default: break;
    }
    const double cw = ws.width / 3.0;
    const double ch = ws.height / 3.0;
    const double x0 = -ws.width * 0.5 + col * cw;
    const double y0 = -ws.height * 0.5 + row * ch;
    return {{x0, y0}, {x0 + cw, y0 + ch}};
}

} // namespace placer
