// Unit systems and physical constants. All internal dynamics runs in natural
// units (c = 1); the gaussian-SI mode exists only at the constants boundary
// (chronon value, magnetic moment).
#pragma once

#include <cmath>
#include <numbers>

#include "chronon/errors.hpp"

namespace chronon {

/// CODATA 2018 values, SI. Kept in this one place; never inlined elsewhere.
namespace codata {
inline constexpr double c = 299792458.0;             // m/s (exact)
inline constexpr double e = 1.602176634e-19;         // C (exact)
inline constexpr double m_e = 9.1093837015e-31;      // kg
inline constexpr double eps0 = 8.8541878128e-12;     // F/m
inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double alpha = 7.2973525693e-3;     // fine-structure constant
}  // namespace codata

enum class UnitMode { natural, gaussian_si };

/// Carrier for c, e, m0 and the Coulomb constant k = (4 pi eps0)^-1.
struct UnitSystem {
    UnitMode mode = UnitMode::natural;
    double c = 1.0;
    double e = 1.0;
    double m0 = 1.0;
    double k = 1.0;

    static UnitSystem natural() { return {}; }

    static UnitSystem natural_with_charge(double e) {
        UnitSystem u;
        u.e = e;
        return u;
    }

    /// Electron constants, SI values with k = (4 pi eps0)^-1.
    static UnitSystem electron_si() {
        UnitSystem u;
        u.mode = UnitMode::gaussian_si;
        u.c = codata::c;
        u.e = codata::e;
        u.m0 = codata::m_e;
        u.k = 1.0 / (4.0 * std::numbers::pi * codata::eps0);
        return u;
    }
};

/// Half-chronon theta0 = (2/3) k e^2 / (m0 c^3). The full chronon is tau0 = 2 theta0.
inline double chronon_theta0(const UnitSystem& u) {
    if (u.m0 <= 0.0 || u.c <= 0.0 || u.e <= 0.0 || u.k <= 0.0)
        throw DomainError("chronon_theta0: e, m0, c, k must be positive");
    return (2.0 / 3.0) * u.k * u.e * u.e / (u.m0 * u.c * u.c * u.c);
}

inline double lorentz_gamma(double beta) {
    if (beta < 0.0 || beta >= 1.0)
        throw DomainError("lorentz_gamma: requires 0 <= beta < 1");
    return 1.0 / std::sqrt(1.0 - beta * beta);
}

/// Proper-time quantum tau0 with the derived half-step and ground frequency.
/// omega0 * tau0 = pi holds exactly by construction.
struct ChrononParams {
    double tau0;

    explicit ChrononParams(double tau0_) : tau0(tau0_) {
        if (!(tau0 > 0.0)) throw DomainError("ChrononParams: tau0 must be positive");
    }

    static ChrononParams from_units(const UnitSystem& u) {
        return ChrononParams(2.0 * chronon_theta0(u));
    }

    double theta0() const { return tau0 / 2.0; }
    double omega0() const { return std::numbers::pi / tau0; }
};

}  // namespace chronon
