// Phase-space layer: canonical variables (x_[l], p_[l]), numerical Poisson
// brackets, bracket-driven time evolution, and finite-difference checks of
// the Hamilton equations and of the spin rate identity ds/dtau = p x v.
//
// Bracket definition (metric contraction, signature (-,+,+,+)):
//   {f,g} = sum_l ( df/dx_[l]^mu dg/dp_[l]mu - df/dp_[l]^mu dg/dx_[l]mu )
// so {x^i, p^i} = +1 for spatial i and {x^0, p^0} = -1.
//
// Convention note: time evolution is evaluated as dG/dt + {G, H}. The source
// convention prints the bracket operands in the opposite order; with the
// definition above only {G, H} reproduces the Hamilton equations
// (e.g. {x^1, H} = +dH/dp_1 = xdot^1), so that order is used.
#pragma once

#include <functional>
#include <vector>

#include "chronon/jet.hpp"
#include "chronon/nnm.hpp"

namespace chronon {

using PhaseFunction = std::function<double(const PhasePoint&)>;

/// Invert the canonical map: recover v^(0..2N) from (x_[1..N], p_[0..N]).
/// Requires k_N != 0 (the triangular back-substitution divides by it).
DerivativeJet canonical_to_jet(const NnmModel& model, const PhasePoint& point);

/// H as a function of canonical variables, via jet inversion.
PhaseFunction canonical_hamiltonian(const NnmModel& model);

/// Coordinate / momentum component extractors (handy bracket test functions).
PhaseFunction coordinate_function(int l, int mu);
PhaseFunction momentum_function(int l, int mu);

/// Central-difference Poisson bracket at a point. Step per component is
/// cbrt(machine epsilon) * max(1, |component|).
double poisson_bracket(const PhaseFunction& f, const PhaseFunction& g, const PhasePoint& point);

/// dG/dt + {G, H} for the model's canonical Hamiltonian (see convention note
/// above). dG_dt is the explicit time derivative, zero for autonomous G.
double evolve_via_bracket(const PhaseFunction& G, const PhasePoint& point, const NnmModel& model,
                          double dG_dt = 0.0);

/// Max over l, mu of |xdot_[l]^mu - dH/dp_[l]mu| and |pdot_[l]^mu + dH/dx_[l]mu|
/// along a uniformly spaced trajectory of phase points (central differences
/// across samples for the dots, central differences of H for the gradients).
double hamilton_equations_residual(const NnmModel& model, const std::vector<PhasePoint>& samples,
                                   double dtau);

/// Max over interior samples of |ds/dtau - p_[0] x v| with s from spin_vector
/// and ds/dtau by central differences. Needs at least three jets.
double spin_rate_check(const NnmModel& model, const std::vector<DerivativeJet>& jets, double dtau);

}  // namespace chronon
