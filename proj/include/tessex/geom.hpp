#pragma once

#include <cmath>
#include <optional>
#include <vector>

namespace tessex {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double px, double py) : x(px), y(py) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline double dist2(const Vec2& a, const Vec2& b) { return (a - b).norm2(); }
inline double dist(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

/// Axis-aligned rectangle [xmin,xmax] x [ymin,ymax].
struct Rect {
    double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;

    static Rect centered_square(double half_side) {
        return {-half_side, -half_side, half_side, half_side};
    }

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    double area() const { return width() * height(); }

    bool contains(const Vec2& p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
    bool contains_ball(const Vec2& c, double r) const {
        return c.x - r >= xmin && c.x + r <= xmax && c.y - r >= ymin && c.y + r <= ymax;
    }
    /// Largest radius of a ball centered at the origin that fits inside.
    double inradius_about_origin() const {
        return std::min(std::min(-xmin, xmax), std::min(-ymin, ymax));
    }
    Rect padded(double m) const { return {xmin - m, ymin - m, xmax + m, ymax + m}; }
};

struct ExclusionBall {
    Vec2 center;
    double radius = 0.0;

    bool strictly_inside(const Vec2& p) const {
        return dist2(p, center) < radius * radius;
    }
};

/// Region a replicate is simulated on: a rectangle, optionally intersected
/// with a disk centered at the origin (local-window mode).
struct SimRegion {
    Rect rect;
    std::optional<double> disk_radius;  // intersect with B(0, disk_radius)

    static SimRegion rectangle(Rect r) { return {r, std::nullopt}; }
    static SimRegion disk(double radius) {
        return {Rect::centered_square(radius), radius};
    }

    bool contains(const Vec2& p) const {
        if (!rect.contains(p)) return false;
        if (disk_radius && p.norm2() > *disk_radius * *disk_radius) return false;
        return true;
    }

    /// Whole closed ball B(c, r) inside the region.
    bool contains_ball(const Vec2& c, double r) const {
        if (!rect.contains_ball(c, r)) return false;
        if (disk_radius && c.norm() + r > *disk_radius) return false;
        return true;
    }

    /// Largest ball about the origin that fits.
    double inradius_about_origin() const {
        double r = rect.inradius_about_origin();
        if (disk_radius) r = std::min(r, *disk_radius);
        return r;
    }
};

}  // namespace tessex
