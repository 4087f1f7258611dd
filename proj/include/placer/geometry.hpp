#pragma once

#include <algorithm>
#include <cmath>

namespace placer {

/// Planar position or direction in meters. The workspace frame is centered at
/// the table center: +x rightward, +y away from the viewer.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }

    Vec2 normalized() const {
        const double n = norm();
        return n > 0.0 ? Vec2{x / n, y / n} : Vec2{};
    }
};

/// Axis-aligned box, min <= max componentwise.
struct AABB {
    Vec2 min;
    Vec2 max;

    double width() const { return max.x - min.x; }
    double height() const { return max.y - min.y; }
    Vec2 center() const { return {(min.x + max.x) * 0.5, (min.y + max.y) * 0.5}; }

    bool contains(const Vec2& p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
    }

    bool contains(const AABB& b) const { return contains(b.min) && contains(b.max); }

    bool intersects(const AABB& b) const {
        return min.x < b.max.x && b.min.x < max.x && min.y < b.max.y && b.min.y < max.y;
    }
};

/// Euclidean distance from p to the nearest point of b; 0 if p is inside or on b.
inline double aabb_distance(const Vec2& p, const AABB& b) {
    const double dx = std::max({b.min.x - p.x, 0.0, p.x - b.max.x});
    const double dy = std::max({b.min.y - p.y, 0.0, p.y - b.max.y});
    return std::hypot(dx, dy);
}

/// Smallest distance between any point of a and any point of b; 0 on overlap.
inline double aabb_gap(const AABB& a, const AABB& b) {
    const double dx = std::max({b.min.x - a.max.x, 0.0, a.min.x - b.max.x});
    const double dy = std::max({b.min.y - a.max.y, 0.0, a.min.y - b.max.y});
    return std::hypot(dx, dy);
}

/// Tabletop extent. The coordinate frame is centered at the table center, so
/// the bounds run from -width/2 to +width/2 and -height/2 to +height/2.
struct Workspace {
    double width = 1.0;
    double height = 0.6;

    AABB bounds() const { return {{-width * 0.5, -height * 0.5}, {width * 0.5, height * 0.5}}; }
};

} // namespace placer
