#include "chronon/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "chronon/ald.hpp"
#include "chronon/batch.hpp"
#include "chronon/errors.hpp"
#include "chronon/identity.hpp"
#include "chronon/io.hpp"
#include "chronon/scenario.hpp"

namespace chronon {

namespace {

namespace fs = std::filesystem;

std::string join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory: " + dir);
}

ScenarioConfig load_config(const std::string& path, const CliOverrides& overrides) {
    std::map<std::string, std::string> kv = parse_kv_file(path);
    if (overrides.formulation) kv["formulation"] = *overrides.formulation;
    if (overrides.transmission) kv["transmission"] = *overrides.transmission;
    if (overrides.units) kv["units"] = *overrides.units;
    return scenario_config_from_map(kv, path);
}

/// Mean in-plane rotation angle per step of (u1, u2); the per-step signature
/// of the magnetic scenario.
double step_rotation_angle(const Trajectory& traj) {
    if (traj.states.size() < 2) return 0.0;
    double total = 0.0;
    long count = 0;
    for (std::size_t i = 1; i < traj.states.size(); ++i) {
        const Vec3 a = traj.states[i - 1].u.spatial();
        const Vec3 b = traj.states[i].u.spatial();
        const double ax = a.x, ay = a.y, bx = b.x, by = b.y;
        const double crossz = ax * by - ay * bx;
        const double dotp = ax * bx + ay * by;
        if (crossz == 0.0 && dotp == 0.0) continue;
        total += std::atan2(crossz, dotp);
        ++count;
    }
    return count ? total / static_cast<double>(count) : 0.0;
}

}  // namespace

bool log_enabled() {
    const char* v = std::getenv("CHRONON_LOG");
    return v && *v && std::string(v) != "0";
}

void log_line(const std::string& msg) {
    if (log_enabled()) std::cerr << "[chronon] " << msg << '\n';
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            const CliOverrides& overrides) {
    const ScenarioConfig cfg = load_config(config_path, overrides);
    ensure_dir(out_dir);
    log_line("run: scenario " + cfg.scenario_name + ", " + std::to_string(cfg.steps) + " steps");

    const Trajectory traj = integrate_scenario(cfg);

    const std::string csv_path = join(out_dir, cfg.out_prefix + ".csv");
    const std::string traj_path = join(out_dir, cfg.out_prefix + ".json");
    const std::string report_path = join(out_dir, cfg.out_prefix + "_report.json");
    write_trajectory_csv(traj, csv_path);
    write_json(trajectory_json(cfg, traj), traj_path);
    write_json(run_report_json(cfg, traj, {csv_path, traj_path, report_path}), report_path);

    std::cout << "scenario " << cfg.scenario_name << ": " << to_string(traj.termination) << ", "
              << traj.diagnostics.size() << " steps, outputs in " << out_dir << '\n';
    return traj.termination == TerminationCause::completed ? 0 : 1;
}

int cmd_check_identities(int max_m, int n_trunc, const std::string& out_dir) {
    if (max_m < 1 || max_m > 8)
        throw ConfigError("check-identities: --max-m must lie in 1..8 (certified precision range)");
    if (n_trunc < 1) throw ConfigError("check-identities: --ntrunc must be >= 1");
    ensure_dir(out_dir);

    const IdentityReport report = run_identity_checks(max_m, n_trunc, ExecMode::parallel);
    write_json(identity_report_json(report), join(out_dir, "identity_report.json"));

    int failures = 0;
    for (const IdentityRow& row : report.rows) {
        if (row.pass) continue;
        ++failures;
        std::cout << "FAIL " << row.check << " m=" << row.m << ": value " << format_double(row.value)
                  << ", expected " << format_double(row.expected) << ", error "
                  << format_double(row.error) << " > tol " << format_double(row.tolerance) << '\n';
    }
    std::cout << "identity checks: " << (report.rows.size() - static_cast<std::size_t>(failures))
              << "/" << report.rows.size() << " passed\n";
    return report.all_pass ? 0 : 1;
}

int cmd_compare(const std::string& config_path, const std::string& out_dir) {
    const ScenarioConfig cfg = load_config(config_path, {});
    if (cfg.kind != ScenarioKind::em_pulse)
        throw ConfigError("compare: config must describe an em_pulse scenario");
    ensure_dir(out_dir);

    const UnitSystem un = cfg.units();
    const double theta0 = chronon_theta0(un);
    const double t_on = static_cast<double>(cfg.pulse_onset_step) * cfg.tau0;
    const double t_end = static_cast<double>(cfg.steps) * cfg.tau0;

    // lattice side
    const Trajectory lattice = integrate_scenario(cfg);
    const RunSummary lattice_sum = summarize_trajectory(cfg, lattice);

    // continuous side: physical (non-runaway) pulse response by backward
    // integration from the post-pulse asymptotic state
    const FieldSpec pulse = step_field(cfg.e_field, t_on);
    const Vec3 a_end = (un.e / un.m0) * cfg.e_field;
    const double back_step = -theta0 / 50.0;
    AlNonrelTrajectory physical =
        integrate_al_nonrel(Vec3{}, Vec3{}, a_end, pulse, t_end, t_end, back_step, un);
    std::reverse(physical.samples.begin(), physical.samples.end());

    // pre-pulse decay rate of the continuous solution
    std::vector<double> ts, mags;
    for (const AlNonrelSample& s : physical.samples) {
        if (s.t < t_on - 0.5 * theta0 && s.t > t_on - 6.0 * theta0) {
            ts.push_back(s.t);
            mags.push_back(norm(s.a));
        }
    }
    double pre_rate = 0.0;
    if (ts.size() >= 2) pre_rate = fit_log_slope(ts, mags);

    // free runaway: seeded acceleration, no field
    AlNonrelTrajectory runaway = integrate_al_nonrel(
        Vec3{}, Vec3{}, Vec3{1e-8, 0.0, 0.0}, free_field(), 0.0, 10.0 * theta0, theta0 / 50.0, un);
    std::vector<double> rt, rmag;
    for (const AlNonrelSample& s : runaway.samples) {
        rt.push_back(s.t);
        rmag.push_back(norm(s.a));
    }
    const double runaway_rate = fit_log_slope(rt, rmag);

    const std::string lattice_csv = join(out_dir, cfg.out_prefix + "_lattice.csv");
    const std::string continuum_csv = join(out_dir, cfg.out_prefix + "_continuum.csv");
    const std::string summary_path = join(out_dir, cfg.out_prefix + "_compare.json");
    write_trajectory_csv(lattice, lattice_csv);
    write_al_nonrel_csv(physical, continuum_csv);

    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["config"] = cfg.raw;
    j["theta0"] = theta0;
    j["lattice"] = {{"termination", to_string(lattice.termination)},
                    {"pre_pulse_response", lattice_sum.pre_pulse_response}};
    j["continuum"] = {{"termination", to_string(physical.termination)},
                      {"pre_pulse_decay_rate", pre_rate},
                      {"expected_decay_rate", 1.0 / theta0},
                      {"runaway_efolding_time", runaway_rate != 0.0 ? 1.0 / runaway_rate : 0.0},
                      {"expected_efolding_time", theta0},
                      {"runaway_termination", to_string(runaway.termination)}};
    j["outputs"] = {lattice_csv, continuum_csv, summary_path};
    write_json(j, summary_path);

    std::cout << "compare: lattice pre-pulse response " << format_double(lattice_sum.pre_pulse_response)
              << ", continuum decay rate " << format_double(pre_rate) << " (1/theta0 = "
              << format_double(1.0 / theta0) << ")\n";
    return lattice.termination == TerminationCause::completed ? 0 : 1;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              const CliOverrides& overrides) {
    const ScenarioConfig base = load_config(config_path, overrides);
    if (!base.sweep_key)
        throw ConfigError("sweep: config must provide sweep_key and sweep_values");
    ensure_dir(out_dir);

    struct Row {
        double value = 0.0;
        bool ok = false;
        std::string status;
        RunSummary summary;
        double rotation = 0.0;
        double final_speed = 0.0;
    };
    std::vector<Row> rows(base.sweep_values.size());

    batch_for(base.sweep_values.size(), ExecMode::parallel, [&](std::size_t i) {
        Row& row = rows[i];
        row.value = base.sweep_values[i];
        try {
            std::map<std::string, std::string> kv = base.raw;
            kv.erase("sweep_key");
            kv.erase("sweep_values");
            kv[*base.sweep_key] = format_double(row.value);
            const ScenarioConfig cfg = scenario_config_from_map(kv, config_path);
            const Trajectory traj = integrate_scenario(cfg);
            row.summary = summarize_trajectory(cfg, traj);
            row.rotation = step_rotation_angle(traj);
            row.final_speed = norm(traj.states.back().u.spatial());
            row.ok = traj.termination == TerminationCause::completed;
            row.status = row.ok ? "ok" : to_string(traj.termination);
        } catch (const std::exception& err) {
            row.ok = false;
            row.status = err.what();
        }
    });

    const std::string csv_path = join(out_dir, base.out_prefix + "_sweep.csv");
    std::ofstream out(csv_path);
    if (!out) throw ConfigError("cannot open output file: " + csv_path);
    out << "index," << *base.sweep_key
        << ",status,steps_completed,max_residual,max_post_renorm_drift,"
           "step_rotation_angle,final_speed\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row& row = rows[i];
        out << i << ',' << format_double(row.value) << ',' << (row.ok ? "ok" : "failed") << ','
            << row.summary.steps_completed << ',' << format_double(row.summary.max_residual) << ','
            << format_double(row.summary.max_post_renorm_drift) << ','
            << format_double(row.rotation) << ',' << format_double(row.final_speed) << '\n';
    }
    out.close();

    long ok_count = 0;
    for (const Row& row : rows)
        if (row.ok) ++ok_count;
    std::cout << "sweep: " << ok_count << "/" << rows.size() << " points completed, " << csv_path
              << '\n';
    return ok_count > 0 ? 0 : 1;
}

}  // namespace chronon
