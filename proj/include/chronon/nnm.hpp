// Order-N mechanics with velocity derivatives in the Lagrangian:
//   L = sum_{n=0}^{N} (1/2) k_n (v^(n) . v^(n)),   k_0 = M,
// its equation of motion, canonical momenta of every order, spin tensor and
// vector, canonical spin, and conserved scalar Hamiltonian. Newtonian
// mechanics is the N = 0 case.
#pragma once

#include <array>
#include <vector>

#include "chronon/fourvector.hpp"
#include "chronon/jet.hpp"

namespace chronon {

class NnmModel {
  public:
    /// coeffs are k_1..k_N; k_0 is always the mass.
    NnmModel(double mass, std::vector<double> coeffs);

    /// k_n = (-1)^n M tau0^(2n) / (2n+1)!   for n = 1..N, built by term
    /// recurrence (no factorial is ever formed).
    static NnmModel caldirola(double mass, double tau0, int order);

    int order() const { return static_cast<int>(k_.size()) - 1; }
    double mass() const { return k_[0]; }
    /// k_n, 0 <= n <= order(); k(0) == mass().
    double k(int n) const { return k_[static_cast<std::size_t>(n)]; }

    /// True when the k_n strictly alternate in sign starting from k_0 > 0.
    bool signs_alternate() const;

  private:
    std::vector<double> k_;  // k_[0] = mass
};

/// Antisymmetric rank-2 spin tensor S_{mu nu}.
struct SpinTensor {
    std::array<std::array<double, 4>, 4> s{};
    double operator()(int mu, int nu) const { return s[mu][nu]; }
};

/// Canonical pairs (x_[l], p_[l]) for l = 0..N. x_[l] = v^(l-1) for l >= 1;
/// x_[0] is the position itself.
struct PhasePoint {
    std::vector<FourVector> x;
    std::vector<FourVector> p;

    int order() const { return static_cast<int>(x.size()) - 1; }
};

/// L evaluated on a jet. Needs v^(0..N).
double lagrangian_value(const NnmModel& model, const DerivativeJet& jet);

/// Equation-of-motion residual M a^mu + sum_{n=1}^{N} (-1)^n k_n a^(2n)mu,
/// with a^(2n) = v^(2n+1). Zero on exact solutions. Needs v^(0..2N+1).
FourVector eom_residual(const NnmModel& model, const DerivativeJet& jet);

/// p_[l]^mu = sum_{n=l}^{N} (-1)^(n-l) k_n v^(2n-l)mu. Needs v^(0..2N-l).
FourVector canonical_momentum(const NnmModel& model, const DerivativeJet& jet, int l);

/// All canonical pairs from a jet; x_[0] is supplied separately since the jet
/// does not carry the position. Needs v^(0..2N).
PhasePoint build_phase_point(const NnmModel& model, const DerivativeJet& jet,
                             const FourVector& x0 = {});

/// S_{mu nu} = sum_{n=1}^{N} k_n sum_{l=0}^{n-1} (-1)^(n-l-1)
///             (v_mu^(l) v_nu^(2n-l-1) - v_nu^(l) v_mu^(2n-l-1)).
/// Needs v^(0..2N-1). Antisymmetry is exact by construction.
SpinTensor spin_tensor(const NnmModel& model, const DerivativeJet& jet);

/// s = sum_{n=1}^{N} k_n sum_{l=0}^{n-1} (-1)^(n-l-1) v^(l) x v^(2n-l-1)
/// over spatial parts. Needs v^(0..2N-1).
Vec3 spin_vector(const NnmModel& model, const DerivativeJet& jet);

/// Canonical form s = sum_{l=1}^{N} x_[l] x p_[l] over spatial parts.
Vec3 spin_canonical(const PhasePoint& point);

/// Conserved scalar Hamiltonian
///   H = (1/2) M v^2 + sum_{n=1}^{N} k_n [ (1/2)(v^(n))^2
///       + sum_{l=0}^{n-1} (-1)^(n-l) v^(l).v^(2n-l) ].
/// Needs v^(0..2N).
double hamiltonian_value(const NnmModel& model, const DerivativeJet& jet);

}  // namespace chronon
