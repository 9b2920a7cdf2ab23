#include "chronon/io.hpp"

#include <cstdio>
#include <fstream>

#include "chronon/errors.hpp"

namespace chronon {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_string(Formulation f) {
    switch (f) {
        case Formulation::retarded: return "retarded";
        case Formulation::advanced: return "advanced";
        case Formulation::symmetric: return "symmetric";
    }
    return "?";
}

std::string to_string(TransmissionMode m) {
    return m == TransmissionMode::literal ? "literal" : "trapezoidal";
}

std::string to_string(TerminationCause t) {
    switch (t) {
        case TerminationCause::completed: return "completed";
        case TerminationCause::overflow: return "overflow";
        case TerminationCause::solver_failure: return "solver_failure";
    }
    return "?";
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open output file: " + path);
    return out;
}

}  // namespace

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "n,tau,x0,x1,x2,x3,u0,u1,u2,u3,residual,iterations\n";
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        const ChrononState& s = traj.states[i];
        const bool has_diag = i > 0 && i - 1 < traj.diagnostics.size();
        const StepDiagnostics diag = has_diag ? traj.diagnostics[i - 1] : StepDiagnostics{};
        out << s.n << ',' << format_double(s.tau);
        for (int mu = 0; mu < 4; ++mu) out << ',' << format_double(s.x[mu]);
        for (int mu = 0; mu < 4; ++mu) out << ',' << format_double(s.u[mu]);
        out << ',' << format_double(diag.residual) << ',' << diag.iterations << '\n';
    }
}

void write_al_nonrel_csv(const AlNonrelTrajectory& traj, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "t,rx,ry,rz,vx,vy,vz,ax,ay,az\n";
    for (const AlNonrelSample& s : traj.samples) {
        out << format_double(s.t);
        for (int i = 0; i < 3; ++i) out << ',' << format_double(s.r[i]);
        for (int i = 0; i < 3; ++i) out << ',' << format_double(s.v[i]);
        for (int i = 0; i < 3; ++i) out << ',' << format_double(s.a[i]);
        out << '\n';
    }
}

RunSummary summarize_trajectory(const ScenarioConfig& cfg, const Trajectory& traj) {
    RunSummary sum;
    sum.steps_completed = static_cast<long>(traj.diagnostics.size());
    sum.termination = traj.termination;
    for (const StepDiagnostics& d : traj.diagnostics) {
        sum.max_pre_renorm_drift = std::max(sum.max_pre_renorm_drift, d.pre_renorm_drift);
        sum.max_post_renorm_drift = std::max(sum.max_post_renorm_drift, d.post_renorm_drift);
        sum.max_residual = std::max(sum.max_residual, d.residual);
        ++sum.iteration_histogram[d.iterations];
    }
    if (cfg.kind == ScenarioKind::em_pulse) {
        sum.has_pre_pulse_response = true;
        const FourVector& u0 = traj.states.front().u;
        for (const ChrononState& s : traj.states) {
            if (s.n >= cfg.pulse_onset_step) break;
            sum.pre_pulse_response = std::max(sum.pre_pulse_response, frame_norm(s.u - u0));
        }
    }
    return sum;
}

namespace {

nlohmann::json summary_json(const RunSummary& sum) {
    nlohmann::json j;
    j["steps_completed"] = sum.steps_completed;
    j["termination"] = to_string(sum.termination);
    j["max_pre_renorm_drift"] = sum.max_pre_renorm_drift;
    j["max_post_renorm_drift"] = sum.max_post_renorm_drift;
    j["max_residual"] = sum.max_residual;
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [iters, count] : sum.iteration_histogram)
        hist[std::to_string(iters)] = count;
    j["iteration_histogram"] = hist;
    if (sum.has_pre_pulse_response) j["pre_pulse_response"] = sum.pre_pulse_response;
    return j;
}

}  // namespace

nlohmann::json trajectory_json(const ScenarioConfig& cfg, const Trajectory& traj) {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["scenario"] = cfg.scenario_name;
    j["formulation"] = to_string(traj.formulation);
    j["transmission"] = to_string(traj.transmission);
    j["relativistic"] = traj.relativistic;
    j["tau0"] = cfg.tau0;
    j["termination"] = to_string(traj.termination);
    if (!traj.error_message.empty()) j["error"] = traj.error_message;
    nlohmann::json states = nlohmann::json::array();
    for (const ChrononState& s : traj.states) {
        states.push_back({{"n", s.n},
                          {"tau", s.tau},
                          {"x", {s.x[0], s.x[1], s.x[2], s.x[3]}},
                          {"u", {s.u[0], s.u[1], s.u[2], s.u[3]}}});
    }
    j["states"] = states;
    return j;
}

nlohmann::json run_report_json(const ScenarioConfig& cfg, const Trajectory& traj,
                               const std::vector<std::string>& manifest) {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["config"] = cfg.raw;
    j["termination"] = to_string(traj.termination);
    if (!traj.error_message.empty()) j["error"] = traj.error_message;
    j["summary"] = summary_json(summarize_trajectory(cfg, traj));
    j["outputs"] = manifest;
    return j;
}

void write_json(const nlohmann::json& j, const std::string& path) {
    std::ofstream out = open_out(path);
    out << j.dump(2) << '\n';
}

}  // namespace chronon
