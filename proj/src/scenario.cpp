#include "chronon/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "chronon/errors.hpp"

namespace chronon {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': cannot parse number from '" + value + "'");
    }
    if (trim(value.substr(pos)) != "")
        throw ConfigError("config key '" + key + "': trailing characters in '" + value + "'");
    return v;
}

long parse_long(const std::string& key, const std::string& value) {
    const double v = parse_double(key, value);
    const long l = static_cast<long>(v);
    if (static_cast<double>(l) != v)
        throw ConfigError("config key '" + key + "': expected an integer, got '" + value + "'");
    return l;
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
    if (out.empty()) throw ConfigError("config key '" + key + "': empty list");
    return out;
}

Vec3 parse_vec3(const std::string& key, const std::string& value) {
    const std::vector<double> v = parse_list(key, value);
    if (v.size() != 3) throw ConfigError("config key '" + key + "': expected 3 components");
    return {v[0], v[1], v[2]};
}

FourVector parse_vec4(const std::string& key, const std::string& value) {
    const std::vector<double> v = parse_list(key, value);
    if (v.size() != 4) throw ConfigError("config key '" + key + "': expected 4 components");
    return {v[0], v[1], v[2], v[3]};
}

const std::map<std::string, ScenarioKind>& kind_table() {
    static const std::map<std::string, ScenarioKind> table = {
        {"free", ScenarioKind::free_motion},
        {"em_pulse", ScenarioKind::em_pulse},
        {"hyperbolic", ScenarioKind::hyperbolic},
        {"time_dependent_force", ScenarioKind::time_dependent_force},
        {"constant_B", ScenarioKind::constant_B},
        {"elastic", ScenarioKind::elastic},
    };
    return table;
}

}  // namespace

bool scenario_is_relativistic(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::free_motion:
        case ScenarioKind::em_pulse:
        case ScenarioKind::hyperbolic:
            return true;
        default:
            return false;
    }
}

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, kind] : kind_table()) n.push_back(name);
        return n;
    }();
    return names;
}

UnitSystem ScenarioConfig::units() const {
    if (unit_mode == UnitMode::gaussian_si) return UnitSystem::electron_si();
    UnitSystem u = UnitSystem::natural();
    u.m0 = mass;
    u.e = charge;
    return u;
}

FieldSpec ScenarioConfig::field() const {
    switch (kind) {
        case ScenarioKind::free_motion:
            return free_field();
        case ScenarioKind::em_pulse:
            return step_field(e_field, static_cast<double>(pulse_onset_step) * tau0);
        case ScenarioKind::hyperbolic:
            return constant_field(e_field, Vec3{});
        case ScenarioKind::time_dependent_force:
            return oscillating_field(e_field, force_omega);
        case ScenarioKind::constant_B:
            return constant_field(Vec3{}, b_field);
        case ScenarioKind::elastic:
            return elastic_field(spring_k, charge);
    }
    throw ConfigError("unknown scenario kind");
}

std::map<std::string, std::string> parse_kv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
        if (kv.count(key))
            throw ConfigError(path + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
        kv[key] = value;
    }
    return kv;
}

ScenarioConfig scenario_config_from_map(std::map<std::string, std::string> kv,
                                        const std::string& source) {
    ScenarioConfig cfg;
    cfg.raw = kv;

    auto take = [&kv](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    const auto scenario = take("scenario");
    if (!scenario) throw ConfigError(source + ": missing required key 'scenario'");
    const auto kind_it = kind_table().find(*scenario);
    if (kind_it == kind_table().end()) {
        std::string valid;
        for (const std::string& n : scenario_names()) valid += (valid.empty() ? "" : ", ") + n;
        throw ConfigError(source + ": unknown scenario '" + *scenario + "' (valid: " + valid + ")");
    }
    cfg.kind = kind_it->second;
    cfg.scenario_name = *scenario;

    if (const auto v = take("formulation")) {
        if (*v == "retarded") cfg.formulation = Formulation::retarded;
        else if (*v == "advanced") cfg.formulation = Formulation::advanced;
        else if (*v == "symmetric") cfg.formulation = Formulation::symmetric;
        else throw ConfigError(source + ": formulation must be retarded|advanced|symmetric");
    }
    if (const auto v = take("transmission")) {
        if (*v == "literal") cfg.transmission = TransmissionMode::literal;
        else if (*v == "trapezoidal") cfg.transmission = TransmissionMode::trapezoidal;
        else throw ConfigError(source + ": transmission must be literal|trapezoidal");
    }
    if (const auto v = take("units")) {
        if (*v == "natural") cfg.unit_mode = UnitMode::natural;
        else if (*v == "si") cfg.unit_mode = UnitMode::gaussian_si;
        else throw ConfigError(source + ": units must be natural|si");
    }

    if (const auto v = take("mass")) cfg.mass = parse_double("mass", *v);
    if (const auto v = take("charge")) cfg.charge = parse_double("charge", *v);
    if (cfg.unit_mode == UnitMode::gaussian_si) {
        cfg.tau0 = 2.0 * chronon_theta0(UnitSystem::electron_si());
    }
    if (const auto v = take("tau0")) cfg.tau0 = parse_double("tau0", *v);
    else if (cfg.unit_mode == UnitMode::natural)
        throw ConfigError(source + ": missing required key 'tau0' (natural units)");

    const auto steps = take("steps");
    if (!steps) throw ConfigError(source + ": missing required key 'steps'");
    cfg.steps = parse_long("steps", *steps);

    if (const auto v = take("x0")) cfg.x0 = parse_vec4("x0", *v);
    if (const auto v = take("u0")) cfg.u0 = parse_vec3("u0", *v);
    if (const auto v = take("prev_u")) cfg.prev_u = parse_vec3("prev_u", *v);
    if (const auto v = take("e_field")) cfg.e_field = parse_vec3("e_field", *v);
    if (const auto v = take("b_field")) cfg.b_field = parse_vec3("b_field", *v);
    if (const auto v = take("pulse_onset_step")) cfg.pulse_onset_step = parse_long("pulse_onset_step", *v);
    if (const auto v = take("force_omega")) cfg.force_omega = parse_double("force_omega", *v);
    if (const auto v = take("spring_k")) cfg.spring_k = parse_double("spring_k", *v);
    if (const auto v = take("out_prefix")) cfg.out_prefix = *v;
    if (cfg.out_prefix.empty()) cfg.out_prefix = cfg.scenario_name;
    if (const auto v = take("sweep_key")) cfg.sweep_key = *v;
    if (const auto v = take("sweep_values")) cfg.sweep_values = parse_list("sweep_values", *v);

    if (!kv.empty()) throw ConfigError(source + ": unknown config key '" + kv.begin()->first + "'");

    // cross-field validation; nothing has been integrated or written yet
    if (!(cfg.tau0 > 0.0)) throw ConfigError(source + ": tau0 must be positive");
    if (cfg.steps < 1) throw ConfigError(source + ": steps must be >= 1");
    if (!(cfg.mass > 0.0)) throw ConfigError(source + ": mass must be positive");
    if (cfg.charge == 0.0) throw ConfigError(source + ": charge must be non-zero");
    if (!cfg.relativistic() && cfg.formulation != Formulation::retarded)
        throw ConfigError(source + ": non-relativistic scenarios support only the retarded formulation");
    if (cfg.kind == ScenarioKind::em_pulse &&
        (cfg.pulse_onset_step < 0 || cfg.pulse_onset_step > cfg.steps))
        throw ConfigError(source + ": pulse_onset_step must lie within 0..steps");
    if (cfg.kind == ScenarioKind::elastic && !(cfg.spring_k > 0.0))
        throw ConfigError(source + ": elastic scenario requires spring_k > 0");
    if (cfg.sweep_key && cfg.sweep_values.empty())
        throw ConfigError(source + ": sweep_key given without sweep_values");
    if (cfg.sweep_key) {
        static const std::vector<std::string> sweepable = {"tau0", "steps", "spring_k",
                                                           "force_omega", "mass", "charge"};
        if (std::find(sweepable.begin(), sweepable.end(), *cfg.sweep_key) == sweepable.end())
            throw ConfigError(source + ": sweep_key '" + *cfg.sweep_key +
                              "' is not a sweepable numeric key");
    }
    return cfg;
}

ScenarioConfig parse_scenario_config(const std::string& path) {
    return scenario_config_from_map(parse_kv_file(path), path);
}

namespace {

Trajectory integrate_relativistic(const ScenarioConfig& cfg) {
    const UnitSystem un = cfg.units();
    const ChrononParams params(cfg.tau0);
    const FieldSpec field = cfg.field();

    Trajectory T;
    T.formulation = cfg.formulation;
    T.transmission = cfg.transmission;
    T.relativistic = true;

    ChrononState s0;
    s0.n = 0;
    s0.tau = 0.0;
    s0.x = cfg.x0;
    s0.u = four_velocity_from_spatial(cfg.u0, un.c);
    T.states.push_back(s0);

    try {
        if (cfg.formulation == Formulation::retarded) {
            for (long n = 1; n <= cfg.steps; ++n) {
                StepDiagnostics diag;
                const ChrononState& prev = T.states.back();
                ChrononState next = step_retarded(prev, field, params, un, &diag);
                next.x = transmission_next_position(Formulation::retarded, cfg.transmission,
                                                    cfg.tau0, prev.x, next.u, prev.u);
                T.states.push_back(next);
                T.diagnostics.push_back(diag);
            }
        } else if (cfg.formulation == Formulation::advanced) {
            for (long n = 1; n <= cfg.steps; ++n) {
                StepDiagnostics diag;
                const ChrononState& curr = T.states.back();
                ChrononState next = step_advanced(curr, field, params, un, &diag);
                next.x = transmission_next_position(Formulation::advanced, cfg.transmission,
                                                    cfg.tau0, curr.x, curr.u, curr.u);
                T.states.push_back(next);
                T.diagnostics.push_back(diag);
            }
        } else {
            // symmetric: two-point recurrence; seed the previous velocity
            // explicitly or bootstrap with one advanced step
            ChrononState prev;
            if (cfg.prev_u) {
                prev.n = -1;
                prev.tau = -cfg.tau0;
                prev.u = four_velocity_from_spatial(*cfg.prev_u, un.c);
                prev.x = cfg.x0 - cfg.tau0 * prev.u;
            } else {
                const ChrononState& curr = T.states.back();
                StepDiagnostics diag;
                ChrononState next = step_advanced(curr, field, params, un, &diag);
                next.x = transmission_next_position(Formulation::advanced, cfg.transmission,
                                                    cfg.tau0, curr.x, curr.u, curr.u);
                prev = curr;
                T.states.push_back(next);
                T.diagnostics.push_back(diag);
            }
            while (static_cast<long>(T.states.size()) - 1 < cfg.steps) {
                StepDiagnostics diag;
                const ChrononState& curr = T.states.back();
                ChrononState next = step_symmetric(prev, curr, field, params, un, &diag);
                next.x = transmission_next_position(Formulation::symmetric, cfg.transmission,
                                                    cfg.tau0, prev.x, curr.u, prev.u);
                prev = curr;
                T.states.push_back(next);
                T.diagnostics.push_back(diag);
            }
        }
    } catch (const StepError& err) {
        T.termination = TerminationCause::solver_failure;
        T.error_message = err.what();
    }
    return T;
}

Trajectory integrate_nonrelativistic(const ScenarioConfig& cfg) {
    const UnitSystem un = cfg.units();
    const ChrononParams params(cfg.tau0);
    const FieldSpec field = cfg.field();

    Trajectory T;
    T.formulation = Formulation::retarded;
    T.transmission = cfg.transmission;
    T.relativistic = false;

    Vec3 r = cfg.x0.spatial();
    Vec3 v = cfg.u0;
    ChrononState s0;
    s0.x = FourVector(cfg.x0.t(), r);
    s0.u = FourVector(un.c, v);
    T.states.push_back(s0);

    try {
        for (long n = 1; n <= cfg.steps; ++n) {
            const double t = static_cast<double>(n) * cfg.tau0;
            const EBField eb = field.eb(t, r);
            const Vec3 v_next = step_retarded_nonrel(v, eb, params, un);

            StepDiagnostics diag;
            diag.iterations = 1;
            const Vec3 res = (un.m0 / cfg.tau0) * (v_next - v) -
                             un.e * (eb.E + (1.0 / un.c) * cross(v_next, eb.B));
            diag.residual = norm(res);

            const Vec3 dr = (cfg.transmission == TransmissionMode::literal)
                                ? (cfg.tau0 / 2.0) * (v_next - v)
                                : (cfg.tau0 / 2.0) * (v_next + v);
            r += dr;
            v = v_next;

            ChrononState s;
            s.n = n;
            s.tau = t;
            s.x = FourVector(t, r);
            s.u = FourVector(un.c, v);
            T.states.push_back(s);
            T.diagnostics.push_back(diag);
        }
    } catch (const StepError& err) {
        T.termination = TerminationCause::solver_failure;
        T.error_message = err.what();
    }
    return T;
}

}  // namespace

Trajectory integrate_scenario(const ScenarioConfig& config) {
    return config.relativistic() ? integrate_relativistic(config)
                                 : integrate_nonrelativistic(config);
}

}  // namespace chronon
