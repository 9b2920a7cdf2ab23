#include "chronon/stepper.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "chronon/errors.hpp"

namespace chronon {

namespace {

constexpr int kMaxNewtonIterations = 50;
constexpr double kNewtonTolerance = 1e-12;  // in units of c

FourVector raise_index(const std::array<double, 4>& lower) {
    return {-lower[0], lower[1], lower[2], lower[3]};
}

std::array<double, 4> contract_lower(const FieldTensor& F, const FourVector& u) {
    std::array<double, 4> out{};
    for (int mu = 0; mu < 4; ++mu) {
        double s = 0.0;
        for (int nu = 0; nu < 4; ++nu) s += F[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] * u[nu];
        out[static_cast<std::size_t>(mu)] = s;
    }
    return out;
}

/// Residual of the retarded velocity law, all four components, velocity units.
FourVector retarded_residual(const FourVector& u, const FourVector& u_prev, const FourVector& b,
                             double c) {
    const FourVector du = u - u_prev;
    const double udu = minkowski_dot(u, du) / (c * c);
    return du + udu * u - b;
}

/// 3x3 linear solve by Gaussian elimination with partial pivoting.
std::array<double, 3> solve3(std::array<std::array<double, 3>, 3> A, std::array<double, 3> rhs) {
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
                std::abs(A[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]))
                piv = r;
        std::swap(A[static_cast<std::size_t>(col)], A[static_cast<std::size_t>(piv)]);
        std::swap(rhs[static_cast<std::size_t>(col)], rhs[static_cast<std::size_t>(piv)]);
        const double d = A[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        if (d == 0.0) throw StepError("singular linear system in step solve", 0.0, 0);
        for (int r = col + 1; r < 3; ++r) {
            const double f = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / d;
            for (int cc = col; cc < 3; ++cc)
                A[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
                    f * A[static_cast<std::size_t>(col)][static_cast<std::size_t>(cc)];
            rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(col)];
        }
    }
    std::array<double, 3> x{};
    for (int r = 2; r >= 0; --r) {
        double s = rhs[static_cast<std::size_t>(r)];
        for (int cc = r + 1; cc < 3; ++cc)
            s -= A[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] * x[static_cast<std::size_t>(cc)];
        x[static_cast<std::size_t>(r)] = s / A[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
    }
    return x;
}

/// Orthogonal component of the velocity update from the projected linear
/// system (g + u u/c^2) du = b, solved in a Gram-Schmidt basis of the
/// 3-space Minkowski-orthogonal to u.
FourVector projected_update(const FourVector& u, const FourVector& b, double c) {
    const std::array<FourVector, 4> frame = {FourVector{1, 0, 0, 0}, FourVector{0, 1, 0, 0},
                                             FourVector{0, 0, 1, 0}, FourVector{0, 0, 0, 1}};
    std::array<FourVector, 3> basis{};
    int count = 0;
    for (const FourVector& f : frame) {
        if (count == 3) break;
        // project out u, then the basis vectors found so far
        FourVector w = f + (minkowski_dot(f, u) / (c * c)) * u;
        for (int a = 0; a < count; ++a)
            w -= minkowski_dot(w, basis[static_cast<std::size_t>(a)]) * basis[static_cast<std::size_t>(a)];
        const double n2 = minkowski_norm2(w);  // positive definite orthogonal to timelike u
        if (n2 < 1e-24) continue;
        basis[static_cast<std::size_t>(count++)] = (1.0 / std::sqrt(n2)) * w;
    }
    if (count != 3) throw StepError("failed to build the u-orthogonal basis", 0.0, 0);

    std::array<std::array<double, 3>, 3> A{};
    std::array<double, 3> rhs{};
    for (int a = 0; a < 3; ++a) {
        const FourVector& ea = basis[static_cast<std::size_t>(a)];
        for (int bcol = 0; bcol < 3; ++bcol) {
            const FourVector& eb = basis[static_cast<std::size_t>(bcol)];
            const FourVector Peb = eb + (minkowski_dot(eb, u) / (c * c)) * u;
            A[static_cast<std::size_t>(a)][static_cast<std::size_t>(bcol)] = minkowski_dot(ea, Peb);
        }
        rhs[static_cast<std::size_t>(a)] = minkowski_dot(ea, b);
    }
    const std::array<double, 3> y = solve3(A, rhs);
    FourVector du{};
    for (int a = 0; a < 3; ++a) du += y[static_cast<std::size_t>(a)] * basis[static_cast<std::size_t>(a)];
    return du;
}

}  // namespace

FourVector four_velocity_from_spatial(const Vec3& u_spatial, double c) {
    return {std::sqrt(c * c + dot(u_spatial, u_spatial)), u_spatial};
}

FourVector renormalize_velocity(const FourVector& u, double c) {
    const double n2 = -minkowski_norm2(u);
    if (!(n2 > 0.0)) throw StepError("velocity left the timelike cone", n2, 0);
    return (c / std::sqrt(n2)) * u;
}

FourVector field_impulse(const FieldTensor& F, const FourVector& u, const UnitSystem& units,
                         double dt) {
    const std::array<double, 4> lower = contract_lower(F, u);
    return (dt * units.e / (units.m0 * units.c)) * raise_index(lower);
}

ChrononState step_retarded(const ChrononState& state, const FieldSpec& field,
                           const ChrononParams& params, const UnitSystem& units,
                           StepDiagnostics* diag) {
    const double c = units.c;
    const double tau_new = state.tau + params.tau0;
    const FieldTensor F = field.tensor(tau_new, state.x);
    const FourVector& u_prev = state.u;

    ChrononState next;
    next.n = state.n + 1;
    next.tau = tau_new;
    next.x = state.x;  // transmission law applied by the caller

    StepDiagnostics local;
    // The impulse depends on the unknown u; recomputed every iteration.
    auto residual_at = [&](const FourVector& u) {
        return retarded_residual(u, u_prev, field_impulse(F, u, units, params.tau0), c);
    };

    FourVector u = u_prev;
    double rnorm = frame_norm(residual_at(u));
    const double tol = kNewtonTolerance * c;
    int iter = 0;
    while (rnorm > tol && iter < kMaxNewtonIterations) {
        ++iter;
        Vec3 w = u.spatial();
        const double u0 = u[0];
        const FourVector R = residual_at(u);

        // Jacobian of the spatial residual w.r.t. the spatial velocity, with
        // u0 = sqrt(c^2 + |w|^2) eliminated on the mass shell.
        const double udu = minkowski_dot(u, u - u_prev) / (c * c);
        std::array<std::array<double, 3>, 3> J{};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                double d = (i == j) ? 1.0 + udu : 0.0;
                const double du0_dwj = w[j] / u0;
                // d(u.du)/dw_j = u_prev0 * du0/dw_j - u_prev_j  (on-shell)
                const double dudu = u_prev[0] * du0_dwj - u_prev[j + 1];
                d += u[i + 1] * dudu / (c * c);
                // impulse term: -(tau0 e/(m0 c)) d(F u)^i/dw_j
                const double coeff = params.tau0 * units.e / (units.m0 * units.c);
                d -= coeff * (F[static_cast<std::size_t>(i + 1)][0] * du0_dwj +
                              F[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)]);
                J[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d;
            }
        }
        const std::array<double, 3> delta =
            solve3(J, {-R[1], -R[2], -R[3]});

        // damped update
        double scale = 1.0;
        for (int attempt = 0; attempt < 12; ++attempt) {
            Vec3 w_try = w + scale * Vec3{delta[0], delta[1], delta[2]};
            FourVector u_try = four_velocity_from_spatial(w_try, c);
            const double r_try = frame_norm(residual_at(u_try));
            if (r_try < rnorm || attempt == 11) {
                u = u_try;
                rnorm = r_try;
                break;
            }
            scale *= 0.5;
        }
    }
    if (rnorm > tol)
        throw StepError("retarded step: Newton failed to converge", rnorm, iter);

    local.iterations = iter;
    local.residual = rnorm;
    if (iter == 0) {
        next.u = u_prev;  // exact fixed point: return the seed bit-for-bit
    } else {
        local.pre_renorm_drift = std::abs(minkowski_norm2(u) + c * c) / (c * c);
        next.u = renormalize_velocity(u, c);
    }
    local.post_renorm_drift = std::abs(minkowski_norm2(next.u) + c * c) / (c * c);
    if (diag) *diag = local;
    return next;
}

ChrononState step_advanced(const ChrononState& state, const FieldSpec& field,
                           const ChrononParams& params, const UnitSystem& units,
                           StepDiagnostics* diag) {
    const double c = units.c;
    const FieldTensor F = field.tensor(state.tau, state.x);
    const FourVector b = field_impulse(F, state.u, units, params.tau0);
    const FourVector du = projected_update(state.u, b, c);

    // parallel component from the normalization; b is spacelike so the root
    // is always real, kept as a guard
    const double arg = 1.0 + minkowski_norm2(du) / (c * c);
    if (arg < 0.0)
        throw StepError("advanced step: no real root for the parallel component; "
                        "reduce the field strength relative to tau0",
                        arg, 0);
    const FourVector u_next = std::sqrt(arg) * state.u + du;

    ChrononState next;
    next.n = state.n + 1;
    next.tau = state.tau + params.tau0;
    next.x = state.x;

    StepDiagnostics local;
    {
        const FourVector delta = u_next - state.u;
        const FourVector projected = delta + (minkowski_dot(state.u, delta) / (c * c)) * state.u;
        local.residual = frame_norm(projected - b);
    }
    local.pre_renorm_drift = std::abs(minkowski_norm2(u_next) + c * c) / (c * c);
    next.u = renormalize_velocity(u_next, c);
    local.post_renorm_drift = std::abs(minkowski_norm2(next.u) + c * c) / (c * c);
    if (next.u[0] <= 0.0) throw StepError("advanced step: past-pointing root", 0.0, 0);
    if (diag) *diag = local;
    return next;
}

ChrononState step_symmetric(const ChrononState& prev, const ChrononState& curr,
                            const FieldSpec& field, const ChrononParams& params,
                            const UnitSystem& units, StepDiagnostics* diag) {
    const double c = units.c;
    const FieldTensor F = field.tensor(curr.tau, curr.x);
    const FourVector b = field_impulse(F, curr.u, units, 2.0 * params.tau0);
    const FourVector du = projected_update(curr.u, b, c);

    // u(tau+tau0) = u(tau-tau0) + du + lambda u(tau); lambda from the
    // normalization, stable quadratic branch near lambda = 0.
    const FourVector d = prev.u + du;
    const double ud = minkowski_dot(curr.u, d);
    const double disc = ud * ud + c * c * (minkowski_norm2(d) + c * c);
    if (disc < 0.0)
        throw StepError("symmetric step: no real root for the parallel component; "
                        "reduce the field strength relative to tau0",
                        disc, 0);
    const double lambda_far = (ud - std::sqrt(disc)) / (c * c);
    const double lambda = (lambda_far == 0.0)
                              ? 0.0
                              : -(minkowski_norm2(d) + c * c) / (c * c * lambda_far);
    const FourVector u_next = d + lambda * curr.u;

    ChrononState next;
    next.n = curr.n + 1;
    next.tau = curr.tau + params.tau0;
    next.x = curr.x;

    StepDiagnostics local;
    {
        const FourVector delta = u_next - prev.u;
        const FourVector projected = delta + (minkowski_dot(curr.u, delta) / (c * c)) * curr.u;
        local.residual = frame_norm(projected - b);
    }
    local.pre_renorm_drift = std::abs(minkowski_norm2(u_next) + c * c) / (c * c);
    next.u = (local.pre_renorm_drift == 0.0) ? u_next : renormalize_velocity(u_next, c);
    local.post_renorm_drift = std::abs(minkowski_norm2(next.u) + c * c) / (c * c);
    if (next.u[0] <= 0.0) throw StepError("symmetric step: past-pointing root", 0.0, 0);
    if (diag) *diag = local;
    return next;
}

FourVector transmission_next_position(Formulation formulation, TransmissionMode mode, double tau0,
                                      const FourVector& x_base, const FourVector& u_n,
                                      const FourVector& u_prev) {
    switch (formulation) {
        case Formulation::retarded:
            if (mode == TransmissionMode::literal)
                return x_base + (tau0 / 2.0) * (u_n - u_prev);
            return x_base + (tau0 / 2.0) * (u_n + u_prev);
        case Formulation::advanced:
            return x_base + tau0 * u_n;
        case Formulation::symmetric:
            return x_base + (2.0 * tau0) * u_n;
    }
    throw ConfigError("unknown formulation");
}

Vec3 step_retarded_nonrel(const Vec3& v_prev, const EBField& field, const ChrononParams& params,
                          const UnitSystem& units) {
    const double a = units.e * params.tau0 / (units.m0 * units.c);
    const Vec3& B = field.B;
    // (I - a [.]xB) v = v_prev + (e tau0/m0) E
    std::array<std::array<double, 3>, 3> A = {{{1.0, -a * B.z, a * B.y},
                                               {a * B.z, 1.0, -a * B.x},
                                               {-a * B.y, a * B.x, 1.0}}};
    const Vec3 rhs = v_prev + (units.e * params.tau0 / units.m0) * field.E;
    const std::array<double, 3> v = solve3(A, {rhs.x, rhs.y, rhs.z});
    return {v[0], v[1], v[2]};
}

InternalSolution internal_solution(const ChrononParams& params, const UnitSystem& units) {
    InternalSolution sol{};
    // kinetic energy of the internal rotation equals m0 c^2  =>  gamma = 2
    sol.gamma = 2.0;
    sol.beta0_sq = 1.0 - 1.0 / (sol.gamma * sol.gamma);
    sol.beta0 = std::sqrt(sol.beta0_sq);
    sol.frequency = 2.0 * std::numbers::pi / params.tau0;
    sol.radius = sol.beta0 * units.c * params.tau0 / (2.0 * std::numbers::pi);
    sol.mu = units.e * sol.beta0_sq * units.c * params.tau0 / (4.0 * std::numbers::pi);
    sol.mu_reduced =
        units.k * units.e * units.e * units.e / (4.0 * std::numbers::pi * units.m0 * units.c * units.c);
    sol.mu_schwinger = (codata::alpha / (2.0 * std::numbers::pi)) * units.e * codata::hbar /
                       (2.0 * units.m0 * units.c);
    return sol;
}

}  // namespace chronon
