#include "chronon/nnm.hpp"

#include <cmath>
#include <utility>

#include "chronon/errors.hpp"

namespace chronon {

NnmModel::NnmModel(double mass, std::vector<double> coeffs) {
    if (!(mass > 0.0)) throw DomainError("NnmModel: mass must be positive");
    k_.reserve(coeffs.size() + 1);
    k_.push_back(mass);
    for (double c : coeffs) k_.push_back(c);
}

NnmModel NnmModel::caldirola(double mass, double tau0, int order) {
    if (!(tau0 > 0.0)) throw DomainError("NnmModel::caldirola: tau0 must be positive");
    if (order < 0) throw DomainError("NnmModel::caldirola: order must be non-negative");
    std::vector<double> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order));
    double term = mass;  // k_0
    for (int n = 1; n <= order; ++n) {
        term *= -(tau0 * tau0) / static_cast<double>((2 * n) * (2 * n + 1));
        coeffs.push_back(term);
    }
    return NnmModel(mass, std::move(coeffs));
}

bool NnmModel::signs_alternate() const {
    for (std::size_t n = 1; n < k_.size(); ++n) {
        if (k_[n] == 0.0 || std::signbit(k_[n]) == std::signbit(k_[n - 1])) return false;
    }
    return true;
}

double lagrangian_value(const NnmModel& model, const DerivativeJet& jet) {
    const int N = model.order();
    jet.require_order(N, "lagrangian_value");
    double L = 0.0;
    for (int n = 0; n <= N; ++n) L += 0.5 * model.k(n) * minkowski_norm2(jet[n]);
    return L;
}

FourVector eom_residual(const NnmModel& model, const DerivativeJet& jet) {
    const int N = model.order();
    jet.require_order(2 * N + 1, "eom_residual");
    FourVector r = model.mass() * jet[1];
    double sign = 1.0;
    for (int n = 1; n <= N; ++n) {
        sign = -sign;  // (-1)^n
        r += (sign * model.k(n)) * jet[2 * n + 1];
    }
    return r;
}

FourVector canonical_momentum(const NnmModel& model, const DerivativeJet& jet, int l) {
    const int N = model.order();
    if (l < 0 || l > N) throw DomainError("canonical_momentum: l out of range 0..N");
    jet.require_order(2 * N - l, "canonical_momentum");
    FourVector p{};
    double sign = 1.0;
    for (int n = l; n <= N; ++n) {
        p += (sign * model.k(n)) * jet[2 * n - l];
        sign = -sign;  // (-1)^(n-l)
    }
    return p;
}

PhasePoint build_phase_point(const NnmModel& model, const DerivativeJet& jet,
                             const FourVector& x0) {
    const int N = model.order();
    jet.require_order(2 * N, "build_phase_point");
    PhasePoint pt;
    pt.x.reserve(static_cast<std::size_t>(N) + 1);
    pt.p.reserve(static_cast<std::size_t>(N) + 1);
    pt.x.push_back(x0);
    for (int l = 1; l <= N; ++l) pt.x.push_back(jet[l - 1]);
    for (int l = 0; l <= N; ++l) pt.p.push_back(canonical_momentum(model, jet, l));
    return pt;
}

SpinTensor spin_tensor(const NnmModel& model, const DerivativeJet& jet) {
    const int N = model.order();
    if (N >= 1) jet.require_order(2 * N - 1, "spin_tensor");
    SpinTensor S;
    for (int n = 1; n <= N; ++n) {
        const double kn = model.k(n);
        for (int l = 0; l <= n - 1; ++l) {
            const double w = ((n - l - 1) % 2 == 0 ? 1.0 : -1.0) * kn;
            const FourVector& a = jet[l];
            const FourVector& b = jet[2 * n - l - 1];
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = mu + 1; nu < 4; ++nu) {
                    const double t = w * (a[mu] * b[nu] - a[nu] * b[mu]);
                    S.s[mu][nu] += t;
                }
        }
    }
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < mu; ++nu) S.s[mu][nu] = -S.s[nu][mu];
    return S;
}

Vec3 spin_vector(const NnmModel& model, const DerivativeJet& jet) {
    const int N = model.order();
    if (N >= 1) jet.require_order(2 * N - 1, "spin_vector");
    Vec3 s{};
    for (int n = 1; n <= N; ++n) {
        const double kn = model.k(n);
        for (int l = 0; l <= n - 1; ++l) {
            const double w = ((n - l - 1) % 2 == 0 ? 1.0 : -1.0) * kn;
            s += w * cross(jet[l].spatial(), jet[2 * n - l - 1].spatial());
        }
    }
    return s;
}

Vec3 spin_canonical(const PhasePoint& point) {
    if (point.x.size() != point.p.size())
        throw DomainError("spin_canonical: coordinate/momentum list length mismatch");
    Vec3 s{};
    for (std::size_t l = 1; l < point.x.size(); ++l)
        s += cross(point.x[l].spatial(), point.p[l].spatial());
    return s;
}

double hamiltonian_value(const NnmModel& model, const DerivativeJet& jet) {
    const int N = model.order();
    jet.require_order(2 * N, "hamiltonian_value");
    double H = 0.5 * model.mass() * minkowski_norm2(jet[0]);
    for (int n = 1; n <= N; ++n) {
        double term = 0.5 * minkowski_norm2(jet[n]);
        double sign = (n % 2 == 0) ? 1.0 : -1.0;  // (-1)^(n-l) at l = 0
        for (int l = 0; l <= n - 1; ++l) {
            term += sign * minkowski_dot(jet[l], jet[2 * n - l]);
            sign = -sign;
        }
        H += model.k(n) * term;
    }
    return H;
}

}  // namespace chronon
