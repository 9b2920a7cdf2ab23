// External electromagnetic field evaluators. Relativistic steppers consume
// the antisymmetric tensor F_{mu nu} (lower indices, signature (-,+,+,+),
// gaussian convention F_{i0} = E_i, F_{ij} = eps_{ijk} B_k); non-relativistic
// steppers consume (E, B) 3-vectors at (t, r).
#pragma once

#include <array>
#include <functional>
#include <string>

#include "chronon/fourvector.hpp"

namespace chronon {

using FieldTensor = std::array<std::array<double, 4>, 4>;

struct EBField {
    Vec3 E{};
    Vec3 B{};
};

struct FieldSpec {
    std::string name = "free";
    std::function<FieldTensor(double tau, const FourVector& x)> tensor;
    std::function<EBField(double t, const Vec3& r)> eb;
};

inline FieldTensor tensor_from_eb(const Vec3& E, const Vec3& B) {
    FieldTensor F{};
    for (int i = 0; i < 3; ++i) {
        F[static_cast<std::size_t>(i + 1)][0] = E[i];
        F[0][static_cast<std::size_t>(i + 1)] = -E[i];
    }
    F[1][2] = B.z;
    F[2][1] = -B.z;
    F[1][3] = -B.y;
    F[3][1] = B.y;
    F[2][3] = B.x;
    F[3][2] = -B.x;
    return F;
}

inline FieldSpec free_field() {
    FieldSpec f;
    f.name = "free";
    f.tensor = [](double, const FourVector&) { return FieldTensor{}; };
    f.eb = [](double, const Vec3&) { return EBField{}; };
    return f;
}

inline FieldSpec constant_field(const Vec3& E, const Vec3& B) {
    FieldSpec f;
    f.name = "constant";
    f.tensor = [E, B](double, const FourVector&) { return tensor_from_eb(E, B); };
    f.eb = [E, B](double, const Vec3&) { return EBField{E, B}; };
    return f;
}

/// Zero field before onset, constant E from onset on; the onset sits exactly
/// on a lattice boundary in the scenarios that use it.
inline FieldSpec step_field(const Vec3& E, double onset) {
    FieldSpec f;
    f.name = "step";
    f.tensor = [E, onset](double tau, const FourVector&) {
        return tau >= onset ? tensor_from_eb(E, Vec3{}) : FieldTensor{};
    };
    f.eb = [E, onset](double t, const Vec3&) {
        return t >= onset ? EBField{E, Vec3{}} : EBField{};
    };
    return f;
}

/// E(t) = E0 sin(omega t).
inline FieldSpec oscillating_field(const Vec3& E0, double omega) {
    FieldSpec f;
    f.name = "oscillating";
    f.eb = [E0, omega](double t, const Vec3&) { return EBField{std::sin(omega * t) * E0, Vec3{}}; };
    f.tensor = [E0, omega](double tau, const FourVector&) {
        return tensor_from_eb(std::sin(omega * tau) * E0, Vec3{});
    };
    return f;
}

/// Restoring force -spring_k * r expressed as an effective electric field,
/// E(r) = -(spring_k / charge) r, so that e E = -spring_k r.
inline FieldSpec elastic_field(double spring_k, double charge) {
    FieldSpec f;
    f.name = "elastic";
    f.eb = [spring_k, charge](double, const Vec3& r) {
        return EBField{(-spring_k / charge) * r, Vec3{}};
    };
    return f;
}

}  // namespace chronon
