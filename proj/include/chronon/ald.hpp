// Continuous third-order radiating-electron dynamics, kept as the reference
// that exhibits the runaway and pre-acceleration pathologies the lattice
// steppers avoid. Proper-time convention: u.u = -c^2, reaction prefactor
// (2/3) k e^2 / c^3 (reduces to the familiar e^2/c^3 form in the
// non-relativistic limit).
#pragma once

#include <vector>

#include "chronon/field.hpp"
#include "chronon/fourvector.hpp"
#include "chronon/stepper.hpp"
#include "chronon/units.hpp"

namespace chronon {

/// Third-order initial data: position, velocity, and du/ds.
struct AldState {
    FourVector x{};
    FourVector u{};
    FourVector w{};  // du/ds; must satisfy u.w = 0 at initialization
};

struct AldSample {
    double s = 0.0;
    FourVector x{}, u{}, w{};
};

struct AldTrajectory {
    std::vector<AldSample> samples;
    TerminationCause termination = TerminationCause::completed;
};

/// Reaction 4-force (2/3)(k e^2/c^3) [u2 + u (u.u2)/c^2]; the bracket projects
/// u2 orthogonally to u, so the result is Minkowski-orthogonal to u whenever
/// u.u = -c^2.
FourVector abraham_vector(const FourVector& u, const FourVector& u2, const UnitSystem& units);

/// Fixed-step fourth-order integration of
///   m0 du/ds = (e/c) F u + Gamma,
/// run as the first-order system (x, u, w) with
///   dw/ds = (3 c^3/(2 k e^2)) (m0 w - (e/c) F u) + (w.w/c^2) u.
/// Runaway overflow truncates the trajectory and flags it; that is an
/// expected outcome, not a failure.
AldTrajectory integrate_ald(const AldState& initial, const FieldSpec& field, double duration,
                            double step, const UnitSystem& units);

struct AlNonrelSample {
    double t = 0.0;
    Vec3 r{}, v{}, a{};
};

struct AlNonrelTrajectory {
    std::vector<AlNonrelSample> samples;
    TerminationCause termination = TerminationCause::completed;
};

/// Non-relativistic limit m0 dv/dt - (2/3)(k e^2/c^3) d2v/dt2 = e[E + v x B/c],
/// integrated as (r, v, a) with da/dt = (a - (e/m0)[E + v x B/c]) / theta0.
/// A negative step integrates backward in time (samples returned in call
/// order); backward integration from a post-pulse asymptotic state selects
/// the non-runaway solution.
AlNonrelTrajectory integrate_al_nonrel(const Vec3& r0, const Vec3& v0, const Vec3& a0,
                                       const FieldSpec& field, double t0, double duration,
                                       double step, const UnitSystem& units);

/// Least-squares slope of ln(mag) against t over the given samples.
double fit_log_slope(const std::vector<double>& t, const std::vector<double>& mag);

}  // namespace chronon
