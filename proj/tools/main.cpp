#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chronon/cli.hpp"
#include "chronon/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"chronon: discrete-time electron dynamics and higher-derivative mechanics"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".";
    int max_m = 8, n_trunc = 300;
    std::string formulation, transmission, units;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        if (needs_config)
            cmd->add_option("--config", config_path, "scenario config file")->required();
        cmd->add_option("--out", out_dir, "output directory (default .)");
    };
    auto add_overrides = [&](CLI::App* cmd) {
        cmd->add_option("--formulation", formulation, "retarded|advanced|symmetric")
            ->check(CLI::IsMember({"retarded", "advanced", "symmetric"}));
        cmd->add_option("--transmission", transmission, "literal|trapezoidal")
            ->check(CLI::IsMember({"literal", "trapezoidal"}));
        cmd->add_option("--units", units, "natural|si")->check(CLI::IsMember({"natural", "si"}));
    };

    CLI::App* run = app.add_subcommand("run", "integrate one configured scenario");
    add_common(run, true);
    add_overrides(run);

    CLI::App* check = app.add_subcommand("check-identities", "series and closed-form identity suite");
    add_common(check, false);
    check->add_option("--max-m", max_m, "highest harmonic (1..8)");
    check->add_option("--ntrunc", n_trunc, "series truncation order (default 300)");

    CLI::App* compare = app.add_subcommand("compare", "lattice vs continuum pulse response");
    add_common(compare, true);

    CLI::App* sweep = app.add_subcommand("sweep", "run a config over its sweep grid");
    add_common(sweep, true);
    add_overrides(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    chronon::CliOverrides overrides;
    if (!formulation.empty()) overrides.formulation = formulation;
    if (!transmission.empty()) overrides.transmission = transmission;
    if (!units.empty()) overrides.units = units;

    try {
        if (run->parsed()) return chronon::cmd_run(config_path, out_dir, overrides);
        if (check->parsed()) return chronon::cmd_check_identities(max_m, n_trunc, out_dir);
        if (compare->parsed()) return chronon::cmd_compare(config_path, out_dir);
        if (sweep->parsed()) return chronon::cmd_sweep(config_path, out_dir, overrides);
    } catch (const chronon::ConfigError& err) {
        std::cerr << "config error: " << err.what() << '\n';
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 2;
}
