#include "chronon/ald.hpp"

#include <cmath>

#include "chronon/errors.hpp"

namespace chronon {

namespace {

constexpr double kOverflowGuard = 1e150;

bool finite_state(const FourVector& a, const FourVector& b, const FourVector& c) {
    for (int mu = 0; mu < 4; ++mu)
        if (!std::isfinite(a[mu]) || !std::isfinite(b[mu]) || !std::isfinite(c[mu])) return false;
    return frame_norm(a) < kOverflowGuard && frame_norm(b) < kOverflowGuard &&
           frame_norm(c) < kOverflowGuard;
}

struct AldDeriv {
    FourVector dx, du, dw;
};

AldDeriv ald_rhs(double s, const FourVector& x, const FourVector& u, const FourVector& w,
                 const FieldSpec& field, const UnitSystem& un) {
    const double c = un.c;
    const FieldTensor F = field.tensor ? field.tensor(s, x) : FieldTensor{};
    // external force / m0-free form: f^mu = (e/c) F^mu_nu u^nu
    FourVector f{};
    for (int mu = 0; mu < 4; ++mu) {
        double lower = 0.0;
        for (int nu = 0; nu < 4; ++nu) lower += F[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] * u[nu];
        f[mu] = (mu == 0 ? -1.0 : 1.0) * (un.e / c) * lower;
    }
    const double reaction_inv = 3.0 * c * c * c / (2.0 * un.k * un.e * un.e);
    AldDeriv d;
    d.dx = u;
    d.du = w;
    d.dw = reaction_inv * (un.m0 * w - f) + (minkowski_norm2(w) / (c * c)) * u;
    return d;
}

}  // namespace

FourVector abraham_vector(const FourVector& u, const FourVector& u2, const UnitSystem& units) {
    const double c = units.c;
    const double pref = (2.0 / 3.0) * units.k * units.e * units.e / (c * c * c);
    return pref * (u2 + (minkowski_dot(u, u2) / (c * c)) * u);
}

AldTrajectory integrate_ald(const AldState& initial, const FieldSpec& field, double duration,
                            double step, const UnitSystem& units) {
    if (!(step > 0.0) || !(duration > 0.0))
        throw DomainError("integrate_ald: duration and step must be positive");
    AldTrajectory out;
    const long nsteps = static_cast<long>(std::llround(duration / step));
    out.samples.reserve(static_cast<std::size_t>(nsteps) + 1);

    FourVector x = initial.x, u = initial.u, w = initial.w;
    double s = 0.0;
    out.samples.push_back({s, x, u, w});
    for (long i = 0; i < nsteps; ++i) {
        const AldDeriv k1 = ald_rhs(s, x, u, w, field, units);
        const AldDeriv k2 = ald_rhs(s + 0.5 * step, x + 0.5 * step * k1.dx, u + 0.5 * step * k1.du,
                                    w + 0.5 * step * k1.dw, field, units);
        const AldDeriv k3 = ald_rhs(s + 0.5 * step, x + 0.5 * step * k2.dx, u + 0.5 * step * k2.du,
                                    w + 0.5 * step * k2.dw, field, units);
        const AldDeriv k4 = ald_rhs(s + step, x + step * k3.dx, u + step * k3.du,
                                    w + step * k3.dw, field, units);
        x += (step / 6.0) * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
        u += (step / 6.0) * (k1.du + 2.0 * k2.du + 2.0 * k3.du + k4.du);
        w += (step / 6.0) * (k1.dw + 2.0 * k2.dw + 2.0 * k3.dw + k4.dw);
        s += step;
        if (!finite_state(x, u, w)) {
            out.termination = TerminationCause::overflow;
            break;
        }
        out.samples.push_back({s, x, u, w});
    }
    return out;
}

AlNonrelTrajectory integrate_al_nonrel(const Vec3& r0, const Vec3& v0, const Vec3& a0,
                                       const FieldSpec& field, double t0, double duration,
                                       double step, const UnitSystem& un) {
    if (step == 0.0 || !(duration > 0.0))
        throw DomainError("integrate_al_nonrel: non-zero step and positive duration required");
    const double theta0 = chronon_theta0(un);
    const long nsteps = static_cast<long>(std::llround(duration / std::abs(step)));

    auto rhs = [&](double t, const Vec3& r, const Vec3& v, const Vec3& a, Vec3& dr, Vec3& dv,
                   Vec3& da) {
        const EBField f = field.eb ? field.eb(t, r) : EBField{};
        const Vec3 lorentz = (un.e / un.m0) * (f.E + (1.0 / un.c) * cross(v, f.B));
        dr = v;
        dv = a;
        da = (1.0 / theta0) * (a - lorentz);
    };

    AlNonrelTrajectory out;
    out.samples.reserve(static_cast<std::size_t>(nsteps) + 1);
    Vec3 r = r0, v = v0, a = a0;
    double t = t0;
    out.samples.push_back({t, r, v, a});
    Vec3 dr1, dv1, da1, dr2, dv2, da2, dr3, dv3, da3, dr4, dv4, da4;
    for (long i = 0; i < nsteps; ++i) {
        rhs(t, r, v, a, dr1, dv1, da1);
        rhs(t + 0.5 * step, r + 0.5 * step * dr1, v + 0.5 * step * dv1, a + 0.5 * step * da1, dr2,
            dv2, da2);
        rhs(t + 0.5 * step, r + 0.5 * step * dr2, v + 0.5 * step * dv2, a + 0.5 * step * da2, dr3,
            dv3, da3);
        rhs(t + step, r + step * dr3, v + step * dv3, a + step * da3, dr4, dv4, da4);
        r += (step / 6.0) * (dr1 + 2.0 * dr2 + 2.0 * dr3 + dr4);
        v += (step / 6.0) * (dv1 + 2.0 * dv2 + 2.0 * dv3 + dv4);
        a += (step / 6.0) * (da1 + 2.0 * da2 + 2.0 * da3 + da4);
        t += step;
        const bool finite = std::isfinite(r.x + r.y + r.z + v.x + v.y + v.z + a.x + a.y + a.z);
        if (!finite || norm(a) > kOverflowGuard) {
            out.termination = TerminationCause::overflow;
            break;
        }
        out.samples.push_back({t, r, v, a});
    }
    return out;
}

double fit_log_slope(const std::vector<double>& t, const std::vector<double>& mag) {
    if (t.size() != mag.size() || t.size() < 2)
        throw DomainError("fit_log_slope: need matching samples, at least two");
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!(mag[i] > 0.0)) continue;
        const double y = std::log(mag[i]);
        st += t[i];
        sy += y;
        stt += t[i] * t[i];
        sty += t[i] * y;
        ++n;
    }
    if (n < 2) throw DomainError("fit_log_slope: not enough positive magnitudes");
    const double denom = n * stt - st * st;
    if (denom == 0.0) throw DomainError("fit_log_slope: degenerate abscissae");
    return (n * sty - st * sy) / denom;
}

}  // namespace chronon
