#pragma once

#include <cmath>
#include <stdexcept>

namespace hxr {

/// Vector in Minkowski 3-space R^3_1, signature (+,+,-).
struct LVec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline LVec3 operator+(const LVec3& a, const LVec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline LVec3 operator-(const LVec3& a, const LVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline LVec3 operator-(const LVec3& a) { return {-a.x, -a.y, -a.z}; }
inline LVec3 operator*(double s, const LVec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline LVec3 operator*(const LVec3& a, double s) { return s * a; }
inline LVec3 operator/(const LVec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }

inline LVec3& operator+=(LVec3& a, const LVec3& b) {
    a.x += b.x;
    a.y += b.y;
    a.z += b.z;
    return a;
}

/// <a,b> = ax bx + ay by - az bz.
inline double lorentz_dot(const LVec3& a, const LVec3& b) {
    return a.x * b.x + a.y * b.y - a.z * b.z;
}

/// Lorentzian cross product. The third component is a2 b1 - a1 b2, not the
/// Euclidean a1 b2 - a2 b1; every downstream frame identity depends on this
/// convention.
inline LVec3 lorentz_cross(const LVec3& a, const LVec3& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.y * b.x - a.x * b.y};
}

/// Point on the upper sheet of x^2 + y^2 - z^2 = -1.
struct HPoint {
    LVec3 v;
};

/// Membership tolerance for analytic inputs; callers with numerically
/// integrated data should pass their own.
inline constexpr double kHyperboloidTol = 1e-9;

inline bool on_hyperboloid(const LVec3& p, double tol = kHyperboloidTol) {
    if (!(tol > 0.0)) throw std::invalid_argument("on_hyperboloid: tol must be > 0");
    return std::abs(lorentz_dot(p, p) + 1.0) <= tol && p.z > 0.0;
}

/// Radially rescale a timelike upper-sheet vector onto the hyperboloid.
/// Idempotent on points already there.
inline HPoint project_to_hyperboloid(const LVec3& p) {
    const double q = lorentz_dot(p, p);
    if (!(q < 0.0) || !(p.z > 0.0))
        throw std::domain_error("project_to_hyperboloid: input must be timelike with z > 0");
    return HPoint{p / std::sqrt(-q)};
}

}  // namespace hxr
