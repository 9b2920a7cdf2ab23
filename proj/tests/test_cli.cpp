#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chronon/cli.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(CHRONON_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("chronon_test_" + tag + "_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kFreeConfig =
    "scenario = free\n"
    "tau0 = 0.5\n"
    "steps = 20\n"
    "u0 = 0.2,0,0\n";

}  // namespace

TEST_CASE("run command completes with exit 0 and writes the manifest") {
    TempDir dir("run");
    write_file(dir.file("free.cfg"), kFreeConfig);
    CHECK(run_cli("run --config " + dir.file("free.cfg") + " --out " + dir.file("out")) == 0);
    CHECK(fs::exists(dir.file("out") + "/free.csv"));
    CHECK(fs::exists(dir.file("out") + "/free.json"));
    CHECK(fs::exists(dir.file("out") + "/free_report.json"));

    const nlohmann::json report = nlohmann::json::parse(read_file(dir.file("out") + "/free_report.json"));
    CHECK(report["schema_version"] == "1");
    CHECK(report["termination"] == "completed");
    CHECK(report["outputs"].size() == 3);
    CHECK(report["config"]["scenario"] == "free");

    // flat velocity columns: first and last data rows carry the same u1
    std::stringstream csv(read_file(dir.file("out") + "/free.csv"));
    std::string header, first, line, last;
    std::getline(csv, header);
    std::getline(csv, first);
    while (std::getline(csv, line))
        if (!line.empty()) last = line;
    CHECK(header == "n,tau,x0,x1,x2,x3,u0,u1,u2,u3,residual,iterations");
    auto column = [](const std::string& row, int idx) {
        std::stringstream ss(row);
        std::string cell;
        for (int i = 0; i <= idx; ++i) std::getline(ss, cell, ',');
        return cell;
    };
    CHECK(column(first, 7) == column(last, 7));
}

TEST_CASE("rerunning a config produces byte-identical CSV output") {
    TempDir dir("idem");
    write_file(dir.file("free.cfg"), kFreeConfig);
    REQUIRE(run_cli("run --config " + dir.file("free.cfg") + " --out " + dir.file("a")) == 0);
    REQUIRE(run_cli("run --config " + dir.file("free.cfg") + " --out " + dir.file("b")) == 0);
    CHECK(read_file(dir.file("a") + "/free.csv") == read_file(dir.file("b") + "/free.csv"));
    CHECK(read_file(dir.file("a") + "/free_report.json") ==
          read_file(dir.file("b") + "/free_report.json"));
}

TEST_CASE("usage errors exit 2 and write nothing") {
    TempDir dir("usage");
    write_file(dir.file("bad.cfg"), "scenario = warp\ntau0 = 1\nsteps = 5\n");
    CHECK(run_cli("run --config " + dir.file("bad.cfg") + " --out " + dir.file("out")) == 2);
    CHECK_FALSE(fs::exists(dir.file("out")));

    write_file(dir.file("unknownkey.cfg"), std::string(kFreeConfig) + "mystery = 1\n");
    CHECK(run_cli("run --config " + dir.file("unknownkey.cfg") + " --out " + dir.file("out2")) == 2);
    CHECK_FALSE(fs::exists(dir.file("out2")));

    CHECK(run_cli("run --out " + dir.file("out3")) == 2);              // missing --config
    CHECK(run_cli("frobnicate") == 2);                                  // unknown subcommand
    CHECK(run_cli("check-identities --max-m 12") == 2);                 // out of certified range
    write_file(dir.file("free.cfg"), kFreeConfig);
    CHECK(run_cli("run --config " + dir.file("free.cfg") + " --formulation sideways") == 2);
}

TEST_CASE("em_pulse report flags zero pre-pulse response") {
    TempDir dir("pulse");
    write_file(dir.file("pulse.cfg"),
               "scenario = em_pulse\n"
               "tau0 = 1\n"
               "steps = 60\n"
               "pulse_onset_step = 40\n"
               "e_field = 0.05,0,0\n"
               "u0 = 0.1,0,0\n");
    CHECK(run_cli("run --config " + dir.file("pulse.cfg") + " --out " + dir.file("out")) == 0);
    const nlohmann::json report =
        nlohmann::json::parse(read_file(dir.file("out") + "/em_pulse_report.json"));
    CHECK(report["summary"]["pre_pulse_response"] == 0.0);
}

TEST_CASE("check-identities emits the report; oracle rows keep it red") {
    TempDir dir("ident");
    // Series rows all pass; the boxed-closed-form vs truncated-oracle rows do
    // not (see README, "Known discrepancy"), so the command exits 1.
    CHECK(run_cli("check-identities --out " + dir.file("out")) == 1);
    const nlohmann::json report =
        nlohmann::json::parse(read_file(dir.file("out") + "/identity_report.json"));
    CHECK(report["all_pass"] == false);
    int series_fail = 0, oracle_fail = 0;
    for (const auto& row : report["rows"]) {
        if (row["pass"] == true) continue;
        const std::string check = row["check"];
        if (check == "spin_oracle_vs_closed" || check == "hamiltonian_oracle_vs_closed")
            ++oracle_fail;
        else
            ++series_fail;
    }
    CHECK(series_fail == 0);
    CHECK(oracle_fail > 0);
}

TEST_CASE("compare command quantifies the pathology contrast") {
    TempDir dir("cmp");
    write_file(dir.file("pulse.cfg"),
               "scenario = em_pulse\n"
               "tau0 = 1.3333333333333333\n"  // 2 theta0 at e = m = 1
               "steps = 40\n"
               "pulse_onset_step = 20\n"
               "e_field = 0.01,0,0\n");
    CHECK(run_cli("compare --config " + dir.file("pulse.cfg") + " --out " + dir.file("out")) == 0);
    const nlohmann::json j =
        nlohmann::json::parse(read_file(dir.file("out") + "/em_pulse_compare.json"));
    CHECK(j["lattice"]["pre_pulse_response"] == 0.0);
    const double theta0 = j["theta0"];
    const double rate = j["continuum"]["pre_pulse_decay_rate"];
    CHECK(std::abs(rate * theta0 - 1.0) < 0.05);
    const double efold = j["continuum"]["runaway_efolding_time"];
    CHECK(std::abs(efold / theta0 - 1.0) < 0.01);
    CHECK(fs::exists(dir.file("out") + "/em_pulse_lattice.csv"));
    CHECK(fs::exists(dir.file("out") + "/em_pulse_continuum.csv"));
}

TEST_CASE("sweep runs the grid and tolerates one bad point") {
    TempDir dir("sweep");
    write_file(dir.file("b.cfg"),
               "scenario = constant_B\n"
               "tau0 = 0.2\n"
               "steps = 50\n"
               "b_field = 0,0,0.8\n"
               "u0 = 0.3,0,0\n"
               "sweep_key = tau0\n"
               "sweep_values = 0.1,0.2,-1,0.4,0.8\n");
    CHECK(run_cli("sweep --config " + dir.file("b.cfg") + " --out " + dir.file("out")) == 0);

    std::stringstream csv(read_file(dir.file("out") + "/constant_B_sweep.csv"));
    std::string line;
    std::getline(csv, line);  // header
    int ok = 0, failed = 0;
    while (std::getline(csv, line)) {
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string idx, value, status, steps_done, residual, drift, angle;
        std::getline(row, idx, ',');
        std::getline(row, value, ',');
        std::getline(row, status, ',');
        std::getline(row, steps_done, ',');
        std::getline(row, residual, ',');
        std::getline(row, drift, ',');
        std::getline(row, angle, ',');
        if (status == "ok") {
            ++ok;
            // per-step in-plane rotation equals -arctan(omega_c tau0)
            const double tau0 = std::stod(value);
            const double expected = -std::atan(0.8 * tau0);
            CHECK(std::stod(angle) == doctest::Approx(expected).epsilon(1e-9));
        } else {
            ++failed;
        }
    }
    CHECK(ok == 4);
    CHECK(failed == 1);
}

TEST_CASE("sweep with every point invalid exits 1") {
    TempDir dir("sweepbad");
    write_file(dir.file("b.cfg"),
               "scenario = free\n"
               "tau0 = 0.2\n"
               "steps = 5\n"
               "sweep_key = tau0\n"
               "sweep_values = -1,-2\n");
    CHECK(run_cli("sweep --config " + dir.file("b.cfg") + " --out " + dir.file("out")) == 1);
}
