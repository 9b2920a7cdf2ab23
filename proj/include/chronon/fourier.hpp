// Periodic internal motion expanded over harmonics of the ground frequency
// omega0 = pi/tau0:
//   v^mu(tau) = p^mu/M + sum_m E_m^mu cos(m omega0 tau) + H_m^mu sin(m omega0 tau)
// with E_m, H_m constant spacelike amplitudes stored as purely spatial
// vectors (center-of-mass representation). This module provides the analytic
// derivative jets of that solution, its equation-of-motion residual, the
// closed-form spin and Hamiltonian, and truncated-series oracles that
// re-evaluate both through the order-N mechanics.
#pragma once

#include <vector>

#include "chronon/fourvector.hpp"
#include "chronon/jet.hpp"
#include "chronon/nnm.hpp"
#include "chronon/series.hpp"

namespace chronon {

struct FourierMode {
    int m = 1;  // harmonic index, >= 1
    Vec3 E{};
    Vec3 H{};
};

struct FourierMotion {
    FourVector p{};     // drift 4-momentum
    double mass = 1.0;  // M
    double tau0;        // proper-time quantum; ground frequency pi/tau0
    std::vector<FourierMode> modes;

    double omega0() const;
    int max_mode() const;
    /// True when the spatial drift momentum vanishes (center-of-mass frame).
    bool is_center_of_mass() const;
};

/// v^(order)(tau). Mode m scales with (m omega0)^order and cycles through the
/// cos/sin phase pattern; the drift contributes only at order 0.
FourVector fourier_velocity(const FourierMotion& motion, double tau, int order = 0);

/// Jet of tau-derivatives v^(0..max_order) at tau. Throws DomainError when
/// (m omega0)^max_order would overflow; the oracles below use the
/// dimensionless path instead and have no such limit for m <= 8.
DerivativeJet fourier_jet(const FourierMotion& motion, double tau, int max_order);

/// Jet of derivatives with respect to theta = omega0 tau (mode factor m per
/// order). Exposed for cross-checking the oracles' rescaling.
DerivativeJet fourier_jet_scaled(const FourierMotion& motion, double tau, int max_order);

struct ElResidual {
    FourVector value{};
    bool precision_warning = false;
};

/// Partial sum of sum_n (M tau0^(2n)/(2n+1)!) a^(2n) on the analytic solution,
/// evaluated per mode by a combined-term recurrence (an exact reordering of
/// the finite double sum; the two-factor form overflows at large n).
/// Near-zero for any motion: each mode carries a sinc-series zero.
ElResidual el_residual_fourier(const FourierMotion& motion, double tau, int n_trunc = 300);

/// Boxed closed form s = (1/4) sum_m (-1)^m E_m x H_m.
/// Requires the center-of-mass frame (zero spatial drift).
Vec3 spin_closed(const FourierMotion& motion);

/// Independent oracle for spin_closed: evaluates spin_vector on the analytic
/// jet with Caldirola coefficients truncated at n_trunc. Computed in
/// dimensionless time (coefficients M kbar_n, mode factor m per derivative)
/// and rescaled by the exact Jacobian 1/omega0; coefficients past the point
/// where they stop contributing at double precision are dropped.
/// The spin of an exact solution is tau-independent; tau selects the
/// evaluation phase.
Vec3 spin_truncated_oracle(const FourierMotion& motion, int n_trunc = 200, double tau = 0.0);

/// Boxed closed form H = p^2/2M + M^3 sum_m [1 + (-1)^m] (E_m^2 + H_m^2),
/// Minkowski squares; the spatial amplitudes square positively under the
/// (-,+,+,+) signature. Accepts a generic-frame drift p.
double hamiltonian_closed(const FourierMotion& motion);

/// Independent oracle for hamiltonian_closed: evaluates hamiltonian_value on
/// the analytic jet with truncated Caldirola coefficients (dimensionless
/// path; the Hamiltonian is invariant under the rescaling since every term
/// pairs derivative orders to an even total).
double hamiltonian_truncated_oracle(const FourierMotion& motion, int n_trunc = 200,
                                    double tau = 0.0);

/// Number of Caldirola coefficients that still contribute at double precision
/// for harmonics up to m_max (capped at n_trunc).
int effective_truncation(int m_max, int n_trunc);

}  // namespace chronon
