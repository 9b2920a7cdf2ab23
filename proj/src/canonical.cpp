#include "chronon/canonical.hpp"

#include <cmath>
#include <limits>

#include "chronon/errors.hpp"

namespace chronon {

namespace {

constexpr double kMetricDiag[4] = {-1.0, 1.0, 1.0, 1.0};

double diff_step(double component) {
    static const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
    return h0 * std::max(1.0, std::abs(component));
}

double eval_checked(const PhaseFunction& f, const PhasePoint& pt) {
    const double v = f(pt);
    if (!std::isfinite(v)) throw EvaluationError("phase-space function returned non-finite value");
    return v;
}

/// d f / d component, central difference.
double partial(const PhaseFunction& f, PhasePoint pt, bool wrt_x, int l, int mu) {
    double& slot = wrt_x ? pt.x[static_cast<std::size_t>(l)][mu] : pt.p[static_cast<std::size_t>(l)][mu];
    const double h = diff_step(slot);
    const double saved = slot;
    slot = saved + h;
    const double fp = eval_checked(f, pt);
    slot = saved - h;
    const double fm = eval_checked(f, pt);
    return (fp - fm) / (2.0 * h);
}

struct Gradient {
    std::vector<std::array<double, 4>> dx, dp;
};

Gradient gradient(const PhaseFunction& f, const PhasePoint& pt) {
    const std::size_t L = pt.x.size();
    Gradient g;
    g.dx.resize(L);
    g.dp.resize(L);
    for (std::size_t l = 0; l < L; ++l)
        for (int mu = 0; mu < 4; ++mu) {
            g.dx[l][static_cast<std::size_t>(mu)] = partial(f, pt, true, static_cast<int>(l), mu);
            g.dp[l][static_cast<std::size_t>(mu)] = partial(f, pt, false, static_cast<int>(l), mu);
        }
    return g;
}

}  // namespace

DerivativeJet canonical_to_jet(const NnmModel& model, const PhasePoint& point) {
    const int N = model.order();
    if (static_cast<int>(point.x.size()) != N + 1 || static_cast<int>(point.p.size()) != N + 1)
        throw DomainError("canonical_to_jet: phase point must carry N+1 canonical pairs");
    if (model.k(N) == 0.0)
        throw DomainError("canonical_to_jet: k_N = 0, canonical map is degenerate");

    std::vector<FourVector> v(static_cast<std::size_t>(2 * N) + 1);
    for (int l = 0; l < N; ++l) v[static_cast<std::size_t>(l)] = point.x[static_cast<std::size_t>(l) + 1];
    // v^(N) from p_[N] = k_N v^(N)
    v[static_cast<std::size_t>(N)] = (1.0 / model.k(N)) * point.p[static_cast<std::size_t>(N)];
    // back-substitute p_[l] = sum_{n=l}^{N} (-1)^(n-l) k_n v^(2n-l) for l = N-1..0
    for (int l = N - 1; l >= 0; --l) {
        FourVector rest{};
        double sign = 1.0;
        for (int n = l; n <= N - 1; ++n) {
            rest += (sign * model.k(n)) * v[static_cast<std::size_t>(2 * n - l)];
            sign = -sign;
        }
        // remaining term: (-1)^(N-l) k_N v^(2N-l)
        const double top_sign = ((N - l) % 2 == 0) ? 1.0 : -1.0;
        v[static_cast<std::size_t>(2 * N - l)] =
            (1.0 / (top_sign * model.k(N))) * (point.p[static_cast<std::size_t>(l)] - rest);
    }
    return DerivativeJet(std::move(v));
}

PhaseFunction canonical_hamiltonian(const NnmModel& model) {
    return [model](const PhasePoint& pt) {
        return hamiltonian_value(model, canonical_to_jet(model, pt));
    };
}

PhaseFunction coordinate_function(int l, int mu) {
    return [l, mu](const PhasePoint& pt) { return pt.x[static_cast<std::size_t>(l)][mu]; };
}

PhaseFunction momentum_function(int l, int mu) {
    return [l, mu](const PhasePoint& pt) { return pt.p[static_cast<std::size_t>(l)][mu]; };
}

double poisson_bracket(const PhaseFunction& f, const PhaseFunction& g, const PhasePoint& point) {
    const Gradient gf = gradient(f, point);
    const Gradient gg = gradient(g, point);
    double sum = 0.0;
    for (std::size_t l = 0; l < point.x.size(); ++l)
        for (std::size_t mu = 0; mu < 4; ++mu)
            sum += kMetricDiag[mu] * (gf.dx[l][mu] * gg.dp[l][mu] - gf.dp[l][mu] * gg.dx[l][mu]);
    return sum;
}

double evolve_via_bracket(const PhaseFunction& G, const PhasePoint& point, const NnmModel& model,
                          double dG_dt) {
    return dG_dt + poisson_bracket(G, canonical_hamiltonian(model), point);
}

double hamilton_equations_residual(const NnmModel& model, const std::vector<PhasePoint>& samples,
                                   double dtau) {
    if (samples.size() < 3)
        throw DomainError("hamilton_equations_residual: need at least three samples");
    if (!(dtau > 0.0)) throw DomainError("hamilton_equations_residual: dtau must be positive");
    const PhaseFunction H = canonical_hamiltonian(model);
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
        const PhasePoint& pt = samples[i];
        const Gradient gH = gradient(H, pt);
        for (std::size_t l = 0; l < pt.x.size(); ++l)
            for (int mu = 0; mu < 4; ++mu) {
                const double xdot = (samples[i + 1].x[l][mu] - samples[i - 1].x[l][mu]) / (2.0 * dtau);
                const double pdot = (samples[i + 1].p[l][mu] - samples[i - 1].p[l][mu]) / (2.0 * dtau);
                // raise the gradient index: dH/dp_[l]mu with x^mu components
                const double dH_dp = kMetricDiag[mu] * gH.dp[l][static_cast<std::size_t>(mu)];
                const double dH_dx = kMetricDiag[mu] * gH.dx[l][static_cast<std::size_t>(mu)];
                worst = std::max(worst, std::abs(xdot - dH_dp));
                worst = std::max(worst, std::abs(pdot + dH_dx));
            }
    }
    return worst;
}

double spin_rate_check(const NnmModel& model, const std::vector<DerivativeJet>& jets, double dtau) {
    if (jets.size() < 3) throw DomainError("spin_rate_check: need at least three successive jets");
    if (!(dtau > 0.0)) throw DomainError("spin_rate_check: dtau must be positive");
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < jets.size(); ++i) {
        const Vec3 sp = spin_vector(model, jets[i + 1]);
        const Vec3 sm = spin_vector(model, jets[i - 1]);
        const Vec3 ds = (1.0 / (2.0 * dtau)) * (sp - sm);
        const Vec3 pxv = cross(canonical_momentum(model, jets[i], 0).spatial(), jets[i][0].spatial());
        worst = std::max(worst, norm(ds - pxv));
    }
    return worst;
}

}  // namespace chronon
