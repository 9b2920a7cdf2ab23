// Config-driven scenario runs. A scenario config is a flat key = value file
// ('#' comments); one config fully determines a run. Validation happens
// before any integration or output.
//
// Keys:
//   scenario    = free | em_pulse | hyperbolic | time_dependent_force |
//                 constant_B | elastic                      (required)
//   formulation = retarded | advanced | symmetric           (default retarded)
//   transmission= literal | trapezoidal                     (default literal)
//   units       = natural | si                              (default natural)
//   tau0        = <double>    (required in natural mode; si default 2 theta0)
//   steps       = <int >= 1>                                (required)
//   mass, charge= <double>    (natural defaults 1)
//   x0          = t,x,y,z     (default zeros)
//   u0          = ux,uy,uz    (spatial 4-velocity / 3-velocity; default zeros)
//   prev_u      = ux,uy,uz    (symmetric formulation seed; optional)
//   e_field     = Ex,Ey,Ez    b_field = Bx,By,Bz
//   pulse_onset_step = <int>  (em_pulse)
//   force_omega = <double>    (time_dependent_force)
//   spring_k    = <double>    (elastic)
//   out_prefix  = <name>      (output base name; default scenario name)
//   sweep_key   = <key>       sweep_values = v1,v2,...      (sweep runs only)
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chronon/field.hpp"
#include "chronon/stepper.hpp"
#include "chronon/units.hpp"

namespace chronon {

enum class ScenarioKind {
    free_motion,
    em_pulse,
    hyperbolic,
    time_dependent_force,
    constant_B,
    elastic,
};

/// Relativistic scenarios run the lattice velocity laws; the rest run the
/// non-relativistic retarded law.
bool scenario_is_relativistic(ScenarioKind kind);

const std::vector<std::string>& scenario_names();

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::free_motion;
    std::string scenario_name = "free";
    Formulation formulation = Formulation::retarded;
    TransmissionMode transmission = TransmissionMode::literal;
    UnitMode unit_mode = UnitMode::natural;
    double tau0 = 1.0;
    long steps = 1;
    double mass = 1.0;
    double charge = 1.0;
    FourVector x0{};
    Vec3 u0{};
    std::optional<Vec3> prev_u;
    Vec3 e_field{};
    Vec3 b_field{};
    long pulse_onset_step = 0;
    double force_omega = 1.0;
    double spring_k = 0.0;
    std::string out_prefix;
    std::optional<std::string> sweep_key;
    std::vector<double> sweep_values;
    std::map<std::string, std::string> raw;  // echoed into reports

    bool relativistic() const { return scenario_is_relativistic(kind); }
    UnitSystem units() const;
    FieldSpec field() const;
};

/// key = value lines, '#' comments, order-preserving.
std::map<std::string, std::string> parse_kv_file(const std::string& path);

/// Build and fully validate a config; throws ConfigError on any problem.
ScenarioConfig scenario_config_from_map(std::map<std::string, std::string> kv,
                                        const std::string& source);
ScenarioConfig parse_scenario_config(const std::string& path);

/// Run the configured scenario to completion (or to the failing step, which
/// leaves the partial trajectory attached to the error's diagnostics).
Trajectory integrate_scenario(const ScenarioConfig& config);

}  // namespace chronon
