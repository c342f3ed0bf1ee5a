#pragma once

// Quaternion arithmetic over doubles: the ambient algebra for the unit
// spheres S^3, S^7 and for Sp(2) computations.

#include <array>
#include <cmath>
#include <ostream>

#include "cheegerlab/rng.hpp"

namespace cheegerlab {

struct Quat {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr Quat() = default;
    constexpr Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
    // Real scalars embed as w + 0i + 0j + 0k.
    constexpr Quat(double real) : w(real) {}

    static constexpr Quat zero() { return {0, 0, 0, 0}; }
    static constexpr Quat one() { return {1, 0, 0, 0}; }
    static constexpr Quat i() { return {0, 1, 0, 0}; }
    static constexpr Quat j() { return {0, 0, 1, 0}; }
    static constexpr Quat k() { return {0, 0, 0, 1}; }

    constexpr Quat operator+(const Quat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    constexpr Quat operator-(const Quat& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    constexpr Quat operator-() const { return {-w, -x, -y, -z}; }
    constexpr Quat operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
    constexpr Quat operator/(double s) const { return {w / s, x / s, y / s, z / s}; }

    // Hamilton product.
    constexpr Quat operator*(const Quat& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    Quat& operator+=(const Quat& o) { return *this = *this + o; }
    Quat& operator-=(const Quat& o) { return *this = *this - o; }
    Quat& operator*=(const Quat& o) { return *this = *this * o; }
    Quat& operator*=(double s) { return *this = *this * s; }

    constexpr Quat conj() const { return {w, -x, -y, -z}; }
    constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }
    constexpr double re() const { return w; }
    constexpr Quat im() const { return {0, x, y, z}; }

    Quat inverse() const { return conj() / norm_sq(); }
    Quat normalized() const { return *this / norm(); }

    constexpr double operator[](int a) const { return a == 0 ? w : a == 1 ? x : a == 2 ? y : z; }
    double& operator[](int a) { return a == 0 ? w : a == 1 ? x : a == 2 ? y : z; }
};

inline Quat operator*(double s, const Quat& q) { return q * s; }

inline double qdot(const Quat& a, const Quat& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double qdist(const Quat& a, const Quat& b) { return (a - b).norm(); }

// Quaternion exponential of a pure imaginary argument:
// exp(p) = cos|p| + sin|p| p/|p|, with exp(0) = 1.
inline Quat qexp_imaginary(const Quat& p) {
    const double t = p.norm();
    if (t < 1e-300) return Quat::one();
    const double s = std::sin(t) / t;
    return Quat(std::cos(t), p.x * s, p.y * s, p.z * s);
}

// Integer powers of a quaternion (negative exponents via the inverse).
inline Quat qpow(const Quat& q, int k) {
    Quat base = k >= 0 ? q : q.inverse();
    int n = k >= 0 ? k : -k;
    Quat out = Quat::one();
    while (n > 0) {
        if (n & 1) out = out * base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

// Haar-uniform point of S^3: a normalized 4-dimensional gaussian.
inline Quat random_unit_quat(Rng& rng) {
    Quat q(rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian());
    return q.normalized();
}

inline Quat random_quat(Rng& rng) {
    return Quat(rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian());
}

// Uniform pure-imaginary unit quaternion.
inline Quat random_imaginary_unit(Rng& rng) {
    Quat q(0, rng.gaussian(), rng.gaussian(), rng.gaussian());
    return q.normalized();
}

inline std::ostream& operator<<(std::ostream& os, const Quat& q) {
    return os << "(" << q.w << "," << q.x << "," << q.y << "," << q.z << ")";
}

}  // namespace cheegerlab
