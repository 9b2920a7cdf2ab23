// Finite-difference electron dynamics on the proper-time lattice tau = n tau0.
// Three formulations: retarded (radiating), advanced (absorbing), symmetric
// (non-radiating); each velocity law pairs with its transmission law for the
// positions. Velocities satisfy u.u = -c^2 on every lattice point.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chronon/field.hpp"
#include "chronon/fourvector.hpp"
#include "chronon/units.hpp"

namespace chronon {

enum class Formulation { retarded, advanced, symmetric };
enum class TransmissionMode { literal, trapezoidal };

struct StepDiagnostics {
    int iterations = 0;
    double residual = 0.0;          // final solver residual (velocity units)
    double pre_renorm_drift = 0.0;  // |u.u + c^2|/c^2 before renormalization
    double post_renorm_drift = 0.0;
};

struct ChrononState {
    long n = 0;
    double tau = 0.0;
    FourVector x{};
    FourVector u{};
};

enum class TerminationCause { completed, overflow, solver_failure };

struct Trajectory {
    Formulation formulation = Formulation::retarded;
    TransmissionMode transmission = TransmissionMode::literal;
    bool relativistic = true;
    std::vector<ChrononState> states;
    std::vector<StepDiagnostics> diagnostics;  // one entry per step taken
    TerminationCause termination = TerminationCause::completed;
    std::string error_message;
};

/// Future-pointing 4-velocity with the given spatial part: u0 = sqrt(c^2+|u|^2).
FourVector four_velocity_from_spatial(const Vec3& u_spatial, double c);

/// Rescale u so that u.u = -c^2 exactly (up to round-off).
FourVector renormalize_velocity(const FourVector& u, double c);

/// (dt e/(m0 c)) F^mu_nu u^nu with the index raised; Minkowski-orthogonal to
/// u for every antisymmetric tensor.
FourVector field_impulse(const FieldTensor& F, const FourVector& u, const UnitSystem& units,
                         double dt);

/// Retarded step: solves
///   (m0/tau0) { u(tau)-u(tau-tau0) + u(tau) [u(tau).(u(tau)-u(tau-tau0))]/c^2 }
///     = (e/c) F(tau) u(tau)
/// for u(tau) by damped Newton on the mass shell, seeded at u(tau-tau0)
/// (absolute residual tolerance 1e-12 c, max 50 iterations). The seed is
/// returned untouched, bit for bit, when it already satisfies the equation
/// (in particular whenever F = 0).
ChrononState step_retarded(const ChrononState& state, const FieldSpec& field,
                           const ChrononParams& params, const UnitSystem& units,
                           StepDiagnostics* diag = nullptr);

/// Advanced step: u(tau+tau0) enters linearly through the projector
/// g + u u/c^2, which is singular along u; the orthogonal part is solved in a
/// Gram-Schmidt basis of the u-complement and the parallel part comes from
/// the normalization u(tau+tau0).u(tau+tau0) = -c^2 (future root).
ChrononState step_advanced(const ChrononState& state, const FieldSpec& field,
                           const ChrononParams& params, const UnitSystem& units,
                           StepDiagnostics* diag = nullptr);

/// Symmetric step over the pair (u(tau-tau0), u(tau)); same projected solve
/// as the advanced step with spacing 2 tau0.
ChrononState step_symmetric(const ChrononState& prev, const ChrononState& curr,
                            const FieldSpec& field, const ChrononParams& params,
                            const UnitSystem& units, StepDiagnostics* diag = nullptr);

/// Next position under the transmission law of the given formulation.
///   retarded literal:      x_base + (tau0/2) (u_n - u_prev)   [x_base = x_{n-1}]
///   retarded trapezoidal:  x_base + (tau0/2) (u_n + u_prev)   [x_base = x_{n-1}]
///   advanced:              x_base + tau0 u_n                  [x_base = x_n]
///   symmetric:             x_base + 2 tau0 u_n                [x_base = x_{n-1}]
FourVector transmission_next_position(Formulation formulation, TransmissionMode mode, double tau0,
                                      const FourVector& x_base, const FourVector& u_n,
                                      const FourVector& u_prev);

/// Non-relativistic retarded step: solves the 3x3 linear system
///   (m0/tau0)[v(t) - v(t-tau0)] = e [E + v(t) x B / c]
/// for v(t); the system matrix I - (e tau0/m0 c) [.]xB has determinant
/// 1 + (omega_c tau0)^2 >= 1 and can never be singular for real B.
Vec3 step_retarded_nonrel(const Vec3& v_prev, const EBField& field, const ChrononParams& params,
                          const UnitSystem& units);

/// Internal circular solution of the free non-relativistic equations and the
/// magnetic moment it carries.
struct InternalSolution {
    double beta0_sq;      // from (gamma-1) m0 c^2 = m0 c^2
    double beta0;
    double gamma;         // = 2
    double frequency;     // angular, 2 pi / tau0
    double radius;        // beta0 c tau0 / (2 pi)
    double mu;            // e beta0^2 c tau0 / (4 pi)
    double mu_reduced;    // k e^3 / (4 pi m0 c^2)
    double mu_schwinger;  // (alpha/2 pi)(e hbar / 2 m0 c), CODATA cross-check
};

InternalSolution internal_solution(const ChrononParams& params, const UnitSystem& units);

}  // namespace chronon
