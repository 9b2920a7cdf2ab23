// Shared test utilities: deterministic random inputs and analytic jet
// families used as ground truth.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "chronon/field.hpp"
#include "chronon/fourier.hpp"
#include "chronon/fourvector.hpp"
#include "chronon/jet.hpp"
#include "chronon/nnm.hpp"

namespace chronon::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed = 20240917ull) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Vec3 random_vec3(std::mt19937_64& rng, double scale = 1.0) {
    return {uniform(rng, -scale, scale), uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

inline FourVector random_four(std::mt19937_64& rng, double scale = 1.0) {
    return {uniform(rng, -scale, scale), uniform(rng, -scale, scale), uniform(rng, -scale, scale),
            uniform(rng, -scale, scale)};
}

inline DerivativeJet random_jet(std::mt19937_64& rng, int max_order, double scale = 1.0) {
    std::vector<FourVector> v;
    v.reserve(static_cast<std::size_t>(max_order) + 1);
    for (int n = 0; n <= max_order; ++n) v.push_back(random_four(rng, scale));
    return DerivativeJet(std::move(v));
}

inline FieldTensor random_antisymmetric(std::mt19937_64& rng, double scale = 1.0) {
    FieldTensor F{};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
            const double v = uniform(rng, -scale, scale);
            F[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = v;
            F[static_cast<std::size_t>(nu)][static_cast<std::size_t>(mu)] = -v;
        }
    return F;
}

/// Polynomial trajectory x(tau) with four-vector coefficients: a consistent
/// analytic jet family. v^(n)(tau) is the exact n-th derivative of v = x'.
class PolynomialFamily {
  public:
    PolynomialFamily(std::mt19937_64& rng, int degree, double scale = 0.5) {
        for (int d = 0; d <= degree; ++d) coeff_.push_back(random_four(rng, scale));
    }

    /// v^(order)(tau) where v(tau) = sum_d coeff_d tau^d.
    FourVector velocity_derivative(double tau, int order) const {
        FourVector out{};
        for (std::size_t d = static_cast<std::size_t>(order); d < coeff_.size(); ++d) {
            double f = 1.0;
            for (int j = 0; j < order; ++j) f *= static_cast<double>(d - static_cast<std::size_t>(j));
            out += (f * std::pow(tau, static_cast<double>(d) - order)) * coeff_[d];
        }
        return out;
    }

    DerivativeJet jet(double tau, int max_order) const {
        std::vector<FourVector> v;
        for (int n = 0; n <= max_order; ++n) v.push_back(velocity_derivative(tau, n));
        return DerivativeJet(std::move(v));
    }

  private:
    std::vector<FourVector> coeff_;
};

inline FourierMotion random_motion(std::mt19937_64& rng, int max_m, double amp = 1.0,
                                   bool with_drift = false) {
    FourierMotion motion;
    motion.mass = 1.0;
    motion.tau0 = uniform(rng, 2.5, 5.0);
    if (with_drift) motion.p = FourVector(uniform(rng, 0.5, 2.0), random_vec3(rng, 0.5));
    for (int m = 1; m <= max_m; ++m)
        motion.modes.push_back({m, random_vec3(rng, amp), random_vec3(rng, amp)});
    return motion;
}

/// Kinematically derived per-mode closed forms of the truncated evaluators
/// (independent ground truth for the oracle implementations):
///   spin  = sum_m  (M/(m omega0)) (-1)^m/2  E_m x H_m
///   H     = p^2/2M + sum_m (M/4) (-1)^m (E_m^2 + H_m^2)
inline Vec3 derived_spin(const FourierMotion& motion) {
    Vec3 s{};
    for (const FourierMode& mode : motion.modes) {
        const double sign = (mode.m % 2 == 0) ? 1.0 : -1.0;
        s += (motion.mass / (mode.m * motion.omega0())) * (sign / 2.0) * cross(mode.E, mode.H);
    }
    return s;
}

inline double derived_hamiltonian(const FourierMotion& motion) {
    double H = minkowski_norm2(motion.p) / (2.0 * motion.mass);
    for (const FourierMode& mode : motion.modes) {
        const double sign = (mode.m % 2 == 0) ? 1.0 : -1.0;
        H += (motion.mass / 4.0) * sign * (dot(mode.E, mode.E) + dot(mode.H, mode.H));
    }
    return H;
}

}  // namespace chronon::testing
