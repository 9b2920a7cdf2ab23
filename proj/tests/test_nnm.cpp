#include <doctest.h>

#include <cmath>
#include <numbers>

#include "chronon/fourier.hpp"
#include "chronon/nnm.hpp"
#include "helpers.hpp"

using namespace chronon;
namespace ct = chronon::testing;

namespace {

double rel_diff(const FourVector& a, const FourVector& b) {
    const double scale = std::max(frame_norm(a), frame_norm(b));
    return scale == 0.0 ? 0.0 : frame_norm(a - b) / scale;
}

double rel_diff(const Vec3& a, const Vec3& b) {
    const double scale = std::max(norm(a), norm(b));
    return scale == 0.0 ? 0.0 : norm(a - b) / scale;
}

}  // namespace

TEST_CASE("caldirola coefficients follow the term recurrence") {
    const double M = 2.5, tau0 = 1.3;
    const NnmModel model = NnmModel::caldirola(M, tau0, 3);
    CHECK(model.k(0) == M);
    CHECK(model.k(1) == doctest::Approx(-M * std::pow(tau0, 2) / 6.0).epsilon(1e-15));
    CHECK(model.k(2) == doctest::Approx(M * std::pow(tau0, 4) / 120.0).epsilon(1e-15));
    CHECK(model.k(3) == doctest::Approx(-M * std::pow(tau0, 6) / 5040.0).epsilon(1e-15));
    CHECK(model.signs_alternate());
    CHECK_FALSE(NnmModel(1.0, {2.0, 3.0}).signs_alternate());
    CHECK_THROWS_AS(NnmModel(0.0, {}), DomainError);
}

TEST_CASE("lagrangian_value") {
    SUBCASE("newtonian limit") {
        const NnmModel model(1.0, {});
        const DerivativeJet jet{FourVector{0.0, 0.3, 0.0, 0.0}};
        CHECK(lagrangian_value(model, jet) == doctest::Approx(0.045).epsilon(1e-15));
    }
    SUBCASE("zero jet") {
        const NnmModel model(2.0, {-0.5});
        const DerivativeJet jet{FourVector{}, FourVector{}};
        CHECK(lagrangian_value(model, jet) == 0.0);
    }
    SUBCASE("order-one cancellation") {
        const NnmModel model(1.0, {-1.0});
        const DerivativeJet jet{FourVector{0, 1, 0, 0}, FourVector{0, 0, 1, 0}};
        CHECK(lagrangian_value(model, jet) == 0.0);
    }
    SUBCASE("jet too short") {
        const NnmModel model(1.0, {-1.0, 0.1});
        const DerivativeJet jet{FourVector{0, 1, 0, 0}};
        CHECK_THROWS_AS(lagrangian_value(model, jet), JetLengthError);
    }
}

TEST_CASE("eom_residual") {
    auto rng = ct::make_rng(21);
    SUBCASE("uniform motion gives the zero vector") {
        const NnmModel model = NnmModel::caldirola(1.0, 0.7, 3);
        std::vector<FourVector> v(8);
        v[0] = ct::random_four(rng);
        const FourVector r = eom_residual(model, DerivativeJet(v));
        CHECK(frame_norm(r) == 0.0);
    }
    SUBCASE("order one: a''(tau) = (M/k1) a solves the equation") {
        const double M = 1.7, k1 = -0.4;
        const NnmModel model(M, {k1});
        std::vector<FourVector> v(4);
        v[0] = ct::random_four(rng);
        v[1] = ct::random_four(rng);
        v[2] = ct::random_four(rng);
        v[3] = (M / k1) * v[1];
        CHECK(frame_norm(eom_residual(model, DerivativeJet(v))) < 1e-14);
    }
    SUBCASE("truncated infinite-order model annihilates the m = 1 harmonic") {
        // tau0 = pi puts the ground frequency at 1, keeping all analytic
        // derivatives bounded for the direct jet evaluation
        FourierMotion motion;
        motion.mass = 1.0;
        motion.tau0 = std::numbers::pi;
        motion.modes = {{1, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}};
        const NnmModel model = NnmModel::caldirola(1.0, motion.tau0, 200);
        const DerivativeJet jet = fourier_jet(motion, 0.4, 2 * 200 + 1);
        CHECK(frame_norm(eom_residual(model, jet)) < 1e-8);
    }
    SUBCASE("linearity, exact on disjoint-support jets") {
        const NnmModel model = NnmModel::caldirola(1.0, 1.1, 2);
        std::vector<FourVector> a(6), b(6);
        for (int n = 0; n < 6; ++n) {
            if (n % 2 == 0) a[static_cast<std::size_t>(n)] = ct::random_four(rng);
            else b[static_cast<std::size_t>(n)] = ct::random_four(rng);
        }
        const DerivativeJet ja(a), jb(b);
        CHECK(eom_residual(model, ja + jb) == eom_residual(model, ja) + eom_residual(model, jb));
    }
    SUBCASE("linearity under exact doubling") {
        const NnmModel model = NnmModel::caldirola(1.0, 1.1, 2);
        const DerivativeJet j = ct::random_jet(rng, 5);
        CHECK(eom_residual(model, j + j) == eom_residual(model, j) + eom_residual(model, j));
    }
    SUBCASE("linearity on random jets") {
        const NnmModel model = NnmModel::caldirola(1.0, 1.1, 2);
        const DerivativeJet j1 = ct::random_jet(rng, 5), j2 = ct::random_jet(rng, 5);
        CHECK(rel_diff(eom_residual(model, j1 + j2),
                       eom_residual(model, j1) + eom_residual(model, j2)) < 1e-14);
    }
    SUBCASE("jet too short") {
        const NnmModel model(1.0, {-1.0});
        CHECK_THROWS_AS(eom_residual(model, ct::random_jet(rng, 2)), JetLengthError);
    }
}

TEST_CASE("canonical_momentum") {
    auto rng = ct::make_rng(31);
    SUBCASE("newtonian momentum") {
        const NnmModel model(1.4, {});
        const DerivativeJet jet{FourVector{1, 0.2, 0.3, 0}};
        CHECK(canonical_momentum(model, jet, 0) == 1.4 * jet[0]);
    }
    SUBCASE("top order keeps a single term") {
        const NnmModel model = NnmModel::caldirola(1.0, 0.9, 3);
        const DerivativeJet jet = ct::random_jet(rng, 6);
        CHECK(canonical_momentum(model, jet, 3) == model.k(3) * jet[3]);
    }
    SUBCASE("order four written out term by term") {
        const NnmModel model = NnmModel::caldirola(2.0, 1.2, 4);
        const DerivativeJet jet = ct::random_jet(rng, 8);
        const FourVector expected = model.mass() * jet[0] - model.k(1) * jet[2] +
                                    model.k(2) * jet[4] - model.k(3) * jet[6] +
                                    model.k(4) * jet[8];
        CHECK(rel_diff(canonical_momentum(model, jet, 0), expected) < 1e-15);
    }
    SUBCASE("coefficient extraction on basis jets") {
        const NnmModel model = NnmModel::caldirola(2.0, 1.2, 4);
        const double expected[9] = {model.mass(), 0.0, -model.k(1), 0.0, model.k(2),
                                    0.0,          -model.k(3), 0.0, model.k(4)};
        for (int order = 0; order <= 8; ++order) {
            std::vector<FourVector> v(9);
            v[static_cast<std::size_t>(order)] = FourVector{0, 1, 0, 0};
            const FourVector p = canonical_momentum(model, DerivativeJet(v), 0);
            CHECK(p[1] == expected[order]);
        }
    }
    SUBCASE("range and length errors") {
        const NnmModel model(1.0, {-1.0});
        CHECK_THROWS_AS(canonical_momentum(model, ct::random_jet(rng, 3), 2), DomainError);
        CHECK_THROWS_AS(canonical_momentum(model, ct::random_jet(rng, 0), 0), JetLengthError);
    }
}

TEST_CASE("spin_tensor") {
    auto rng = ct::make_rng(41);
    SUBCASE("zero when only v^(0) is populated") {
        const NnmModel model = NnmModel::caldirola(1.0, 1.0, 2);
        std::vector<FourVector> v(4);
        v[0] = ct::random_four(rng);
        const SpinTensor S = spin_tensor(model, DerivativeJet(v));
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) CHECK(S(mu, nu) == 0.0);
    }
    SUBCASE("antisymmetry is exact") {
        const NnmModel model = NnmModel::caldirola(1.0, 1.0, 4);
        for (int rep = 0; rep < 20; ++rep) {
            const SpinTensor S = spin_tensor(model, ct::random_jet(rng, 7));
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = 0; nu < 4; ++nu) CHECK(S(mu, nu) == -S(nu, mu));
        }
    }
    SUBCASE("spatial components reproduce the spin vector: s_i = (1/2) eps_ijk S_jk") {
        const NnmModel model = NnmModel::caldirola(1.3, 0.8, 3);
        for (int rep = 0; rep < 20; ++rep) {
            const DerivativeJet jet = ct::random_jet(rng, 5);
            const SpinTensor S = spin_tensor(model, jet);
            const Vec3 s = spin_vector(model, jet);
            // brute-force index contraction over the Levi-Civita symbol
            Vec3 from_tensor{};
            const int eps[3][3][3] = {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
                                      {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                                      {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
            for (int i = 0; i < 3; ++i) {
                double acc = 0.0;
                for (int j = 0; j < 3; ++j)
                    for (int k = 0; k < 3; ++k) acc += eps[i][j][k] * S(j + 1, k + 1);
                from_tensor[i] = 0.5 * acc;
            }
            CHECK(rel_diff(s, from_tensor) < 1e-14);
        }
    }
}

TEST_CASE("spin_vector") {
    auto rng = ct::make_rng(51);
    SUBCASE("order one is k1 (v x a)") {
        const double k1 = -0.7;
        const NnmModel model(1.0, {k1});
        const DerivativeJet jet = ct::random_jet(rng, 1);
        const Vec3 expected = k1 * cross(jet[0].spatial(), jet[1].spatial());
        CHECK(rel_diff(spin_vector(model, jet), expected) < 1e-15);
    }
    SUBCASE("order four written out term by term") {
        const NnmModel model = NnmModel::caldirola(1.5, 1.1, 4);
        for (int rep = 0; rep < 10; ++rep) {
            const DerivativeJet jet = ct::random_jet(rng, 7);
            auto sp = [&](int n) { return jet[n].spatial(); };
            const double k1 = model.k(1), k2 = model.k(2), k3 = model.k(3), k4 = model.k(4);
            const Vec3 expected =
                k1 * cross(sp(0), sp(1)) +
                k2 * (cross(sp(1), sp(2)) - cross(sp(0), sp(3))) +
                k3 * (cross(sp(2), sp(3)) - cross(sp(1), sp(4)) + cross(sp(0), sp(5))) +
                k4 * (cross(sp(3), sp(4)) - cross(sp(2), sp(5)) + cross(sp(1), sp(6)) -
                      cross(sp(0), sp(7)));
            CHECK(rel_diff(spin_vector(model, jet), expected) < 1e-13);
        }
    }
    SUBCASE("zero jet") {
        const NnmModel model = NnmModel::caldirola(1.0, 1.0, 2);
        const DerivativeJet jet(std::vector<FourVector>(4));
        CHECK(norm(spin_vector(model, jet)) == 0.0);
    }
}

TEST_CASE("build_phase_point and spin_canonical") {
    auto rng = ct::make_rng(61);
    SUBCASE("order zero: single pair (x, Mv)") {
        const NnmModel model(1.5, {});
        const DerivativeJet jet{FourVector{1, 0.1, 0.2, 0.3}};
        const FourVector x0{0, 1, 2, 3};
        const PhasePoint pt = build_phase_point(model, jet, x0);
        REQUIRE(pt.x.size() == 1);
        REQUIRE(pt.p.size() == 1);
        CHECK(pt.x[0] == x0);
        CHECK(pt.p[0] == 1.5 * jet[0]);
    }
    SUBCASE("order one: pairs (x, p0), (v, k1 a)") {
        const double k1 = -0.3;
        const NnmModel model(1.0, {k1});
        const DerivativeJet jet = ct::random_jet(rng, 2);
        const PhasePoint pt = build_phase_point(model, jet);
        REQUIRE(pt.x.size() == 2);
        CHECK(pt.x[1] == jet[0]);
        CHECK(rel_diff(pt.p[1], k1 * jet[1]) < 1e-15);
        const Vec3 s = spin_canonical(pt);
        CHECK(rel_diff(s, k1 * cross(jet[0].spatial(), jet[1].spatial())) < 1e-14);
        CHECK(rel_diff(s, spin_vector(model, jet)) < 1e-14);
    }
    SUBCASE("momenta match the defining sum entry-wise at order three") {
        const NnmModel model = NnmModel::caldirola(1.2, 0.9, 3);
        const DerivativeJet jet = ct::random_jet(rng, 6);
        const PhasePoint pt = build_phase_point(model, jet);
        for (int l = 0; l <= 3; ++l) {
            FourVector expected{};
            for (int n = l; n <= 3; ++n) {
                const double sign = ((n - l) % 2 == 0) ? 1.0 : -1.0;
                expected += (sign * model.k(n)) * jet[2 * n - l];
            }
            CHECK(rel_diff(pt.p[static_cast<std::size_t>(l)], expected) < 1e-14);
        }
    }
    SUBCASE("zero internal coordinates give zero canonical spin") {
        PhasePoint pt;
        pt.x.assign(4, FourVector{});
        pt.p.assign(4, FourVector{1, 1, 1, 1});
        pt.x[0] = FourVector{0, 5, 5, 5};  // l = 0 does not enter the spin
        CHECK(norm(spin_canonical(pt)) == 0.0);
    }
    SUBCASE("canonical equivalence on random jets up to order five") {
        for (int N = 1; N <= 5; ++N) {
            const NnmModel model = NnmModel::caldirola(1.0, 1.3, N);
            for (int rep = 0; rep < 10; ++rep) {
                const DerivativeJet jet = ct::random_jet(rng, 2 * N);
                const Vec3 a = spin_vector(model, jet);
                const Vec3 b = spin_canonical(build_phase_point(model, jet));
                CHECK(rel_diff(a, b) < 1e-12);
            }
        }
    }
}

TEST_CASE("hamiltonian_value") {
    auto rng = ct::make_rng(71);
    SUBCASE("newtonian limit") {
        const NnmModel model(1.3, {});
        const DerivativeJet jet{FourVector{0, 0.2, 0, 0}};
        CHECK(hamiltonian_value(model, jet) == doctest::Approx(0.5 * 1.3 * 0.04).epsilon(1e-15));
    }
    SUBCASE("zero jet") {
        const NnmModel model = NnmModel::caldirola(1.0, 1.0, 2);
        CHECK(hamiltonian_value(model, DerivativeJet(std::vector<FourVector>(5))) == 0.0);
    }
    SUBCASE("legendre identity: sum_l p_l . v^(l) - H = L") {
        for (int N = 0; N <= 4; ++N) {
            const NnmModel model = NnmModel::caldirola(1.1, 0.8, N);
            const DerivativeJet jet = ct::random_jet(rng, 2 * N + 1);
            double sum = 0.0;
            for (int l = 0; l <= N; ++l)
                sum += minkowski_dot(canonical_momentum(model, jet, l), jet[l]);
            const double H = hamiltonian_value(model, jet);
            const double L = lagrangian_value(model, jet);
            CHECK(sum - H == doctest::Approx(L).epsilon(1e-12));
        }
    }
    SUBCASE("conserved along an integrated order-two solution") {
        // M a - k1 a'' + k2 a'''' = 0 with alternating signs: two oscillatory
        // branches, omega^2 = [-k1 +- sqrt(k1^2 - 4 k2 M)]/(2 k2)
        const double M = 1.0, k1 = -1.0, k2 = 0.1;
        const NnmModel model(M, {k1, k2});
        std::vector<FourVector> y(5);
        for (auto& entry : y) entry = ct::random_four(rng, 0.3);

        auto deriv = [&](const std::vector<FourVector>& s) {
            std::vector<FourVector> d(5);
            for (int i = 0; i < 4; ++i) d[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i) + 1];
            d[4] = (1.0 / k2) * (k1 * s[3] - M * s[1]);
            return d;
        };
        auto add_scaled = [](const std::vector<FourVector>& a, const std::vector<FourVector>& b,
                             double f) {
            std::vector<FourVector> out(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + f * b[i];
            return out;
        };

        const double h = 0.002;
        const double H0 = hamiltonian_value(model, DerivativeJet(y));
        double max_drift = 0.0;
        const long steps = static_cast<long>(10.0 * 2.0 * std::numbers::pi / 1.06 / h);
        for (long i = 0; i < steps; ++i) {
            const auto d1 = deriv(y);
            const auto d2 = deriv(add_scaled(y, d1, h / 2));
            const auto d3 = deriv(add_scaled(y, d2, h / 2));
            const auto d4 = deriv(add_scaled(y, d3, h));
            for (std::size_t c = 0; c < y.size(); ++c)
                y[c] += (h / 6.0) * (d1[c] + 2.0 * d2[c] + 2.0 * d3[c] + d4[c]);
            if (i % 100 == 0) {
                const double H = hamiltonian_value(model, DerivativeJet(y));
                max_drift = std::max(max_drift, std::abs(H - H0) / std::abs(H0));
            }
        }
        CHECK(max_drift < 1e-8);
    }
    SUBCASE("jet too short") {
        const NnmModel model = NnmModel::caldirola(1.0, 1.0, 2);
        CHECK_THROWS_AS(hamiltonian_value(model, ct::random_jet(rng, 3)), JetLengthError);
    }
}
