#include "chronon/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "chronon/errors.hpp"

namespace chronon {

namespace {

void validate(const FourierMotion& motion) {
    if (!(motion.tau0 > 0.0)) throw DomainError("FourierMotion: tau0 must be positive");
    if (!(motion.mass > 0.0)) throw DomainError("FourierMotion: mass must be positive");
    for (const FourierMode& mode : motion.modes)
        if (mode.m < 1) throw DomainError("FourierMotion: mode index must be >= 1");
}

/// E cos + H sin differentiated `order` times, at phase ph, unit frequency.
Vec3 mode_cycle(const FourierMode& mode, double ph, int order) {
    const double c = std::cos(ph), s = std::sin(ph);
    switch (order & 3) {
        case 0: return mode.E * c + mode.H * s;
        case 1: return -1.0 * mode.E * s + mode.H * c;
        case 2: return -1.0 * mode.E * c - 1.0 * mode.H * s;
        default: return mode.E * s - 1.0 * mode.H * c;
    }
}

DerivativeJet build_jet(const FourierMotion& motion, double tau, int max_order,
                        bool scaled_time) {
    validate(motion);
    const double w0 = motion.omega0();
    std::vector<FourVector> v(static_cast<std::size_t>(max_order) + 1);
    v[0] = FourVector(motion.p.t() / motion.mass, motion.p.spatial() * (1.0 / motion.mass));
    for (const FourierMode& mode : motion.modes) {
        const double ph = mode.m * w0 * tau;
        const double freq = scaled_time ? static_cast<double>(mode.m) : mode.m * w0;
        double f = 1.0;
        for (int n = 0; n <= max_order; ++n) {
            if (!std::isfinite(f))
                throw DomainError("fourier jet: derivative scale overflow; reduce order or omega0");
            const Vec3 term = f * mode_cycle(mode, ph, n);
            v[static_cast<std::size_t>(n)] += FourVector(0.0, term);
            f *= freq;
        }
    }
    return DerivativeJet(std::move(v));
}

NnmModel scaled_caldirola(double mass, int order) {
    // Coefficients of the dimensionless-time form: M kbar_n, i.e. the
    // Caldirola model at tau0 = pi.
    return NnmModel::caldirola(mass, std::numbers::pi, order);
}

}  // namespace

double FourierMotion::omega0() const {
    if (!(tau0 > 0.0)) throw DomainError("FourierMotion: tau0 must be positive");
    return std::numbers::pi / tau0;
}

int FourierMotion::max_mode() const {
    int mm = 0;
    for (const FourierMode& mode : modes) mm = std::max(mm, mode.m);
    return mm;
}

bool FourierMotion::is_center_of_mass() const {
    const Vec3 ps = p.spatial();
    return ps.x == 0.0 && ps.y == 0.0 && ps.z == 0.0;
}

FourVector fourier_velocity(const FourierMotion& motion, double tau, int order) {
    validate(motion);
    if (order < 0) throw DomainError("fourier_velocity: order must be non-negative");
    const double w0 = motion.omega0();
    FourVector v{};
    if (order == 0)
        v = FourVector(motion.p.t() / motion.mass, motion.p.spatial() * (1.0 / motion.mass));
    for (const FourierMode& mode : motion.modes) {
        const double ph = mode.m * w0 * tau;
        const double f = std::pow(mode.m * w0, order);
        v += FourVector(0.0, f * mode_cycle(mode, ph, order));
    }
    return v;
}

DerivativeJet fourier_jet(const FourierMotion& motion, double tau, int max_order) {
    return build_jet(motion, tau, max_order, false);
}

DerivativeJet fourier_jet_scaled(const FourierMotion& motion, double tau, int max_order) {
    return build_jet(motion, tau, max_order, true);
}

ElResidual el_residual_fourier(const FourierMotion& motion, double tau, int n_trunc) {
    validate(motion);
    const double w0 = motion.omega0();
    ElResidual r;
    for (const FourierMode& mode : motion.modes) {
        const SeriesValue s = sinc_series(static_cast<double>(mode.m), n_trunc);
        const double ph = mode.m * w0 * tau;
        const Vec3 dir = mode_cycle(mode, ph, 1);  // -E sin + H cos
        const double amp = motion.mass * mode.m * w0 * s.value;
        r.value += FourVector(0.0, amp * dir);
        r.precision_warning = r.precision_warning || s.precision_warning;
    }
    return r;
}

Vec3 spin_closed(const FourierMotion& motion) {
    validate(motion);
    if (!motion.is_center_of_mass())
        throw DomainError("spin_closed: requires the center-of-mass frame (zero spatial drift)");
    Vec3 s{};
    for (const FourierMode& mode : motion.modes) {
        const double sign = (mode.m % 2 == 0) ? 1.0 : -1.0;
        s += (sign / 4.0) * cross(mode.E, mode.H);
    }
    return s;
}

int effective_truncation(int m_max, int n_trunc) {
    if (n_trunc < 1) throw DomainError("effective_truncation: n_trunc must be >= 1");
    if (m_max <= 0) return 0;
    // Walk |kbar_n| m^(2n) until it stops contributing relative to its peak.
    const double q = std::numbers::pi * m_max;
    double term = 1.0, peak = 1.0;
    int n = 0;
    while (n < n_trunc) {
        term *= (q * q) / static_cast<double>((2 * n + 2) * (2 * n + 3));
        ++n;
        peak = std::max(peak, term);
        if (term < 1e-22 * peak) break;
    }
    return n;
}

Vec3 spin_truncated_oracle(const FourierMotion& motion, int n_trunc, double tau) {
    validate(motion);
    if (!motion.is_center_of_mass())
        throw DomainError("spin_truncated_oracle: requires the center-of-mass frame");
    if (motion.modes.empty()) return {};
    const int N = effective_truncation(motion.max_mode(), n_trunc);
    const NnmModel model = scaled_caldirola(motion.mass, N);
    const DerivativeJet jet = fourier_jet_scaled(motion, tau, std::max(1, 2 * N - 1));
    // One derivative in each spin term is unpaired: exact Jacobian 1/omega0.
    return (1.0 / motion.omega0()) * spin_vector(model, jet);
}

double hamiltonian_closed(const FourierMotion& motion) {
    validate(motion);
    const double M = motion.mass;
    double H = minkowski_norm2(motion.p) / (2.0 * M);
    for (const FourierMode& mode : motion.modes) {
        const double factor = (mode.m % 2 == 0) ? 2.0 : 0.0;  // 1 + (-1)^m
        H += M * M * M * factor * (dot(mode.E, mode.E) + dot(mode.H, mode.H));
    }
    return H;
}

double hamiltonian_truncated_oracle(const FourierMotion& motion, int n_trunc, double tau) {
    validate(motion);
    const int N = effective_truncation(motion.max_mode(), n_trunc);
    const NnmModel model = scaled_caldirola(motion.mass, N);
    const DerivativeJet jet = fourier_jet_scaled(motion, tau, std::max(0, 2 * N));
    // Every Hamiltonian term pairs derivative orders to an even total, so the
    // dimensionless-time value equals the proper-time value exactly.
    return hamiltonian_value(model, jet);
}

}  // namespace chronon
