// Minkowski four-vector and 3-vector algebra. Metric signature (-,+,+,+),
// so a normalized 4-velocity satisfies u.u = -c^2.
#pragma once

#include <array>
#include <cmath>
#include <ostream>

namespace chronon {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(double s, Vec3 v) { return v *= s; }
inline Vec3 operator*(Vec3 v, double s) { return v *= s; }
inline Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

/// Four-component Minkowski vector; component 0 is the time component.
struct FourVector {
    std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

    FourVector() = default;
    FourVector(double t, double x, double y, double z) : c{t, x, y, z} {}
    FourVector(double t, const Vec3& s) : c{t, s.x, s.y, s.z} {}

    double& operator[](int mu) { return c[mu]; }
    double operator[](int mu) const { return c[mu]; }

    double t() const { return c[0]; }
    Vec3 spatial() const { return {c[1], c[2], c[3]}; }

    FourVector& operator+=(const FourVector& o) {
        for (int mu = 0; mu < 4; ++mu) c[mu] += o.c[mu];
        return *this;
    }
    FourVector& operator-=(const FourVector& o) {
        for (int mu = 0; mu < 4; ++mu) c[mu] -= o.c[mu];
        return *this;
    }
    FourVector& operator*=(double s) {
        for (int mu = 0; mu < 4; ++mu) c[mu] *= s;
        return *this;
    }

    bool operator==(const FourVector&) const = default;
};

inline FourVector operator+(FourVector a, const FourVector& b) { return a += b; }
inline FourVector operator-(FourVector a, const FourVector& b) { return a -= b; }
inline FourVector operator*(double s, FourVector v) { return v *= s; }
inline FourVector operator*(FourVector v, double s) { return v *= s; }
inline FourVector operator-(const FourVector& v) { return {-v.c[0], -v.c[1], -v.c[2], -v.c[3]}; }

/// Metric contraction a.b = -a0*b0 + a1*b1 + a2*b2 + a3*b3.
inline double minkowski_dot(const FourVector& a, const FourVector& b) {
    return -a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2] + a.c[3] * b.c[3];
}

inline double minkowski_norm2(const FourVector& a) { return minkowski_dot(a, a); }

/// Euclidean norm of all four components; used for residual magnitudes only.
inline double frame_norm(const FourVector& a) {
    return std::sqrt(a.c[0] * a.c[0] + a.c[1] * a.c[1] + a.c[2] * a.c[2] + a.c[3] * a.c[3]);
}

inline std::ostream& operator<<(std::ostream& os, const FourVector& v) {
    return os << "(" << v.c[0] << ", " << v.c[1] << ", " << v.c[2] << ", " << v.c[3] << ")";
}

inline std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

}  // namespace chronon
