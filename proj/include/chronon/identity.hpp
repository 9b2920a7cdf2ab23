// The identity-check suite behind `chronon check-identities`: series zeros,
// weighted sums, A_m/B_m closed values, the B_m decomposition, and
// oracle-vs-closed spin/Hamiltonian comparisons on canned motions.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "chronon/batch.hpp"

namespace chronon {

struct IdentityRow {
    std::string check;
    int m = 0;
    double value = 0.0;
    double expected = 0.0;
    double error = 0.0;      // |value - expected|, relative for the oracle rows
    double tolerance = 0.0;
    bool pass = false;
    double est_abs_error = 0.0;  // accumulator cancellation estimate
};

struct IdentityReport {
    int max_m = 8;
    int n_trunc = 300;
    std::vector<IdentityRow> rows;
    bool all_pass = false;
};

/// Tolerance tiers of the series identities: 1e-8 through m = 5, 1e-6 beyond.
double identity_tolerance(int m);

IdentityReport run_identity_checks(int max_m, int n_trunc, ExecMode mode = ExecMode::serial);

nlohmann::json identity_report_json(const IdentityReport& report);

}  // namespace chronon
