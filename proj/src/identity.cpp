#include "chronon/identity.hpp"

#include <cmath>

#include "chronon/errors.hpp"
#include "chronon/series.hpp"

namespace chronon {

namespace {

constexpr double kDecompositionTol = 1e-10;
constexpr double kOracleTol = 1e-6;

IdentityRow series_row(const std::string& check, int m, const SeriesValue& s, double expected,
                       double tol) {
    IdentityRow row;
    row.check = check;
    row.m = m;
    row.value = s.value;
    row.expected = expected;
    row.error = std::abs(s.value - expected);
    row.tolerance = tol;
    row.pass = row.error <= tol;
    row.est_abs_error = s.est_abs_error;
    return row;
}

/// Canned motions for the oracle-vs-closed rows: unit amplitudes, M = 1,
/// tau0 = pi, plus one mixed m = 1..3 motion.
std::vector<FourierMotion> canned_motions(int max_m) {
    std::vector<FourierMotion> motions;
    const int top = std::min(max_m, 4);
    for (int m = 1; m <= top; ++m) {
        FourierMotion motion;
        motion.mass = 1.0;
        motion.tau0 = std::numbers::pi;
        motion.modes = {{m, Vec3{1.0, 0.0, 0.0}, Vec3{0.0, 1.0, 0.0}}};
        motions.push_back(motion);
    }
    FourierMotion mixed;
    mixed.mass = 1.0;
    mixed.tau0 = std::numbers::pi;
    mixed.modes = {{1, Vec3{0.4, 0.1, 0.0}, Vec3{0.0, 0.5, 0.2}},
                   {2, Vec3{-0.3, 0.2, 0.1}, Vec3{0.1, 0.0, -0.4}},
                   {3, Vec3{0.2, -0.1, 0.3}, Vec3{-0.2, 0.3, 0.1}}};
    motions.push_back(mixed);
    return motions;
}

}  // namespace

double identity_tolerance(int m) { return m <= 5 ? 1e-8 : 1e-6; }

IdentityReport run_identity_checks(int max_m, int n_trunc, ExecMode mode) {
    if (max_m < 1) throw ConfigError("check-identities: max_m must be >= 1");
    if (n_trunc < 1) throw ConfigError("check-identities: n_trunc must be >= 1");

    IdentityReport report;
    report.max_m = max_m;
    report.n_trunc = n_trunc;

    constexpr int kRowsPerM = 5;
    report.rows.resize(static_cast<std::size_t>(kRowsPerM * max_m));
    batch_for(static_cast<std::size_t>(max_m), mode, [&](std::size_t idx) {
        const int m = static_cast<int>(idx) + 1;
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        const double tol = identity_tolerance(m);
        const SeriesValue sinc = sinc_series(static_cast<double>(m), n_trunc);
        const SeriesValue a = a_coefficient(m, n_trunc);
        const SeriesValue b = b_coefficient(m, n_trunc);

        SeriesValue weighted = a;  // the n-weighted sum is 2 A_m
        weighted.value *= 2.0;
        weighted.est_abs_error *= 2.0;

        IdentityRow* rows = &report.rows[idx * kRowsPerM];
        rows[0] = series_row("sinc_zero", m, sinc, 0.0, tol);
        rows[1] = series_row("weighted_sum", m, weighted, sign / 2.0, tol);
        rows[2] = series_row("a_m", m, a, sign / 4.0, tol);
        rows[3] = series_row("b_m", m, b, 1.0 + sign, tol);
        rows[4] = series_row("b_decomposition", m, b, 1.0 + 4.0 * a.value + sinc.value,
                             kDecompositionTol);
    });

    const std::vector<FourierMotion> motions = canned_motions(max_m);
    const std::vector<OracleComparison> cmp = oracle_batch(motions, std::min(n_trunc, 200), mode);
    for (std::size_t i = 0; i < cmp.size(); ++i) {
        const bool mixed = motions[i].modes.size() > 1;
        const int m = mixed ? 0 : motions[i].modes.front().m;

        IdentityRow spin;
        spin.check = "spin_oracle_vs_closed";
        spin.m = m;
        spin.value = norm(cmp[i].spin_oracle);
        spin.expected = norm(cmp[i].spin_boxed);
        spin.error = cmp[i].spin_rel_diff;
        spin.tolerance = kOracleTol;
        spin.pass = spin.error <= kOracleTol;
        report.rows.push_back(spin);

        IdentityRow ham;
        ham.check = "hamiltonian_oracle_vs_closed";
        ham.m = m;
        ham.value = cmp[i].ham_oracle;
        ham.expected = cmp[i].ham_boxed;
        ham.error = cmp[i].ham_rel_diff;
        ham.tolerance = kOracleTol;
        ham.pass = ham.error <= kOracleTol;
        report.rows.push_back(ham);
    }

    report.all_pass = true;
    for (const IdentityRow& row : report.rows) report.all_pass = report.all_pass && row.pass;
    return report;
}

nlohmann::json identity_report_json(const IdentityReport& report) {
    nlohmann::json j;
    j["schema_version"] = "1";
    j["max_m"] = report.max_m;
    j["n_trunc"] = report.n_trunc;
    j["all_pass"] = report.all_pass;
    nlohmann::json rows = nlohmann::json::array();
    for (const IdentityRow& row : report.rows) {
        rows.push_back({{"check", row.check},
                        {"m", row.m},
                        {"value", row.value},
                        {"expected", row.expected},
                        {"error", row.error},
                        {"tolerance", row.tolerance},
                        {"pass", row.pass},
                        {"est_cancellation_error", row.est_abs_error}});
    }
    j["rows"] = rows;
    return j;
}

}  // namespace chronon
