#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace semiconvex {

using Vec2 = Eigen::Vector2d;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.141592653589793238462643383280;

inline constexpr double kDefaultEpsAngle = 1e-9;
inline constexpr double kDefaultEpsSpace = 1e-9;

// Maps any finite angle to [0, 2*pi). Exact multiples of 2*pi map to 0.
inline double normalize_angle(double theta) {
    if (!std::isfinite(theta))
        throw std::invalid_argument("normalize_angle: non-finite angle");
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;  // fmod rounding can land exactly on 2*pi
    return r;
}

// Signed representative of theta in (-pi, pi].
inline double wrap_to_pi(double theta) {
    double r = normalize_angle(theta);
    if (r > kPi) r -= kTwoPi;
    return r;
}

// Circular distance between two directions, in [0, pi].
inline double angle_distance(double a, double b) {
    return std::abs(wrap_to_pi(a - b));
}

inline Vec2 unit_vector(double theta) { return Vec2(std::cos(theta), std::sin(theta)); }

inline double direction_of(const Vec2& v) { return normalize_angle(std::atan2(v.y(), v.x())); }

// z-component of the 3D cross product of planar vectors.
inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

// Open ray {origin + t*dir(angle) : t > 0}. The origin itself is not part of
// the ray's point set; every membership query downstream honors that.
struct Ray {
    Vec2 origin{0.0, 0.0};
    double angle = 0.0;  // radians, normalized on construction by callers

    Vec2 dir() const { return unit_vector(angle); }
    Vec2 at(double t) const { return origin + t * dir(); }
};

struct BBox {
    Vec2 lo{0.0, 0.0};
    Vec2 hi{0.0, 0.0};

    double width() const { return hi.x() - lo.x(); }
    double height() const { return hi.y() - lo.y(); }
    Vec2 center() const { return 0.5 * (lo + hi); }
    double diagonal() const { return (hi - lo).norm(); }

    void expand(const Vec2& p) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    bool contains(const Vec2& p) const {
        return p.x() >= lo.x() && p.x() <= hi.x() && p.y() >= lo.y() && p.y() <= hi.y();
    }
};

// Distance from p to the closed segment [a, b].
inline double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    Vec2 ab = b - a;
    double len2 = ab.squaredNorm();
    if (len2 <= 0.0) return (p - a).norm();
    double t = (p - a).dot(ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return (p - (a + t * ab)).norm();
}

// Closest point on the closed segment [a, b] to p.
inline Vec2 closest_point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    Vec2 ab = b - a;
    double len2 = ab.squaredNorm();
    if (len2 <= 0.0) return a;
    double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return a + t * ab;
}

}  // namespace semiconvex
