// Deterministic file output: CSV trajectories (17 significant digits, the
// plot interchange format) and JSON reports carrying a schema-version field.
#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "chronon/ald.hpp"
#include "chronon/scenario.hpp"
#include "chronon/stepper.hpp"

namespace chronon {

inline constexpr const char* kReportSchemaVersion = "1";

std::string format_double(double v);
std::string to_string(Formulation f);
std::string to_string(TransmissionMode m);
std::string to_string(TerminationCause t);

/// Columns: n, tau, x0..x3, u0..u3, residual, iterations.
void write_trajectory_csv(const Trajectory& traj, const std::string& path);

/// Columns: t, rx, ry, rz, vx, vy, vz, ax, ay, az.
void write_al_nonrel_csv(const AlNonrelTrajectory& traj, const std::string& path);

/// Scalar run statistics derived from a trajectory.
struct RunSummary {
    long steps_completed = 0;
    TerminationCause termination = TerminationCause::completed;
    double max_pre_renorm_drift = 0.0;
    double max_post_renorm_drift = 0.0;
    double max_residual = 0.0;
    std::map<int, long> iteration_histogram;
    /// em_pulse only: max |u_n - u_0| over all lattice points before onset.
    double pre_pulse_response = 0.0;
    bool has_pre_pulse_response = false;
};

RunSummary summarize_trajectory(const ScenarioConfig& cfg, const Trajectory& traj);

nlohmann::json trajectory_json(const ScenarioConfig& cfg, const Trajectory& traj);

/// Full run report: config echo, termination cause, summary statistics and
/// the manifest of files written.
nlohmann::json run_report_json(const ScenarioConfig& cfg, const Trajectory& traj,
                               const std::vector<std::string>& manifest);

void write_json(const nlohmann::json& j, const std::string& path);

}  // namespace chronon
