#include "zeno/scenario.hpp"

#include <cmath>
#include <ostream>
#include <set>

#include <json.hpp>

#include "zeno/directions.hpp"
#include "zeno/dynamics.hpp"
#include "zeno/errors.hpp"
#include "zeno/format.hpp"
#include "zeno/measurement.hpp"

namespace zeno {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError(path + ": " + what);
}

void reject_unknown(const json& obj, const std::string& prefix, const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) fail(prefix + key, "unknown key");
    }
}

double number_at(const json& obj, const std::string& key, const std::string& path) {
    const json& v = obj.at(key);
    if (!v.is_number()) fail(path, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(path, "must be finite");
    return d;
}

std::optional<double> optional_number(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key)) return std::nullopt;
    return number_at(obj, key, path);
}

std::size_t count_at(const json& obj, const std::string& key, const std::string& path) {
    const json& v = obj.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 2) fail(path, "expected an integer >= 2");
    return static_cast<std::size_t>(v.get<long long>());
}

Scenario parse_scenario(const json& v) {
    if (!v.is_string()) fail("scenario", "expected a string");
    const auto s = v.get<std::string>();
    if (s == "landscape") return Scenario::Landscape;
    if (s == "evolve") return Scenario::Evolve;
    if (s == "zeno") return Scenario::Zeno;
    if (s == "discrete-zeno") return Scenario::DiscreteZeno;
    if (s == "intelligent") return Scenario::Intelligent;
    if (s == "steady-state") return Scenario::SteadyState;
    fail("scenario", "unknown scenario '" + s + "'");
}

BathParams parse_bath(const json& v) {
    if (!v.is_object()) fail("bath", "expected an object");
    reject_unknown(v, "bath.", {"gamma", "N", "psi"});
    if (!v.contains("N")) fail("bath.N", "missing required field");
    const double n = number_at(v, "N", "bath.N");
    if (n < 0.0) fail("bath.N", "must be >= 0");
    const double gamma = optional_number(v, "gamma", "bath.gamma").value_or(1.0);
    if (!(gamma > 0.0)) fail("bath.gamma", "must be > 0");
    if (!v.contains("psi")) fail("bath.psi", "missing required field");
    const double psi = number_at(v, "psi", "bath.psi");
    if (psi < 0.0 || psi >= 2.0 * kPi) fail("bath.psi", "must lie in [0, 2 pi)");
    return {gamma, n, psi};
}

DirectionSpec parse_direction(const json& v) {
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "optimal-1") return OptimalChoice::First;
        if (s == "optimal-2") return OptimalChoice::Second;
        fail("direction", "expected \"optimal-1\", \"optimal-2\" or {theta, phi}");
    }
    if (!v.is_object()) fail("direction", "expected \"optimal-1\", \"optimal-2\" or {theta, phi}");
    reject_unknown(v, "direction.", {"theta", "phi"});
    if (!v.contains("theta")) fail("direction.theta", "missing required field");
    if (!v.contains("phi")) fail("direction.phi", "missing required field");
    const double theta = number_at(v, "theta", "direction.theta");
    const double phi = number_at(v, "phi", "direction.phi");
    if (theta < 0.0 || theta > kPi) fail("direction.theta", "must lie in [0, pi]");
    return MeasurementDirection(theta, phi);
}

InitialStateSpec parse_initial_state(const json& v) {
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "plus-mu") return NamedState::PlusMu;
        if (s == "minus-mu") return NamedState::MinusMu;
        if (s == "excited") return NamedState::Excited;
        if (s == "ground") return NamedState::Ground;
        if (s == "mixed") return NamedState::Mixed;
        fail("initial_state", "unknown state '" + s + "'");
    }
    if (!v.is_array() || v.size() != 3) fail("initial_state", "expected a state name or a Bloch triple");
    BlochVector b;
    double* parts[] = {&b.x, &b.y, &b.z};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!v[i].is_number()) fail("initial_state[" + std::to_string(i) + "]", "expected a number");
        *parts[i] = v[i].get<double>();
    }
    if (!(b.norm() <= 1.0 + 1e-9)) fail("initial_state", "Bloch vector longer than 1");
    return b;
}

void require(bool present, const std::string& path) {
    if (!present) fail(path, "missing required field");
}

json rounded(double v) { return round_significant(v); }

json complex_pair(Complex c) { return json::array({rounded(c.real()), rounded(c.imag())}); }

json report_json(const IntelligentStateReport& r) {
    return {{"amplitudes", json::array({complex_pair(r.state.up()), complex_pair(r.state.down())})},
            {"eigenvalue", complex_pair(r.eigenvalue)},
            {"jz_mean", rounded(r.jz_mean)},
            {"saturation_residual", rounded(r.saturation_residual)},
            {"var_j1", rounded(r.var_j1)},
            {"var_j2", rounded(r.var_j2)}};
}

} // namespace

ScenarioConfig parse_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: malformed JSON (") + e.what() + ")");
    }
    if (!doc.is_object()) fail("config", "top level must be an object");
    reject_unknown(doc, "",
                   {"scenario", "bath", "direction", "initial_state", "t_max", "dt", "delta_t", "grid",
                    "output_path"});
    require(doc.contains("scenario"), "scenario");
    require(doc.contains("bath"), "bath");

    ScenarioConfig cfg{parse_scenario(doc["scenario"]), parse_bath(doc["bath"])};
    if (doc.contains("direction")) cfg.direction = parse_direction(doc["direction"]);
    if (doc.contains("initial_state")) cfg.initial_state = parse_initial_state(doc["initial_state"]);
    cfg.t_max = optional_number(doc, "t_max", "t_max").value_or(cfg.t_max);
    cfg.dt = optional_number(doc, "dt", "dt").value_or(cfg.dt);
    cfg.delta_t = optional_number(doc, "delta_t", "delta_t");
    if (doc.contains("grid")) {
        const json& g = doc["grid"];
        if (!g.is_object()) fail("grid", "expected an object");
        reject_unknown(g, "grid.", {"phi_count", "theta_count"});
        if (g.contains("phi_count")) cfg.phi_count = count_at(g, "phi_count", "grid.phi_count");
        if (g.contains("theta_count")) cfg.theta_count = count_at(g, "theta_count", "grid.theta_count");
    }
    if (doc.contains("output_path")) {
        if (!doc["output_path"].is_string()) fail("output_path", "expected a string");
        cfg.output_path = doc["output_path"].get<std::string>();
    }

    if (!(cfg.t_max > 0.0)) fail("t_max", "must be > 0");
    if (!(cfg.dt > 0.0)) fail("dt", "must be > 0");
    if (cfg.dt > cfg.t_max) fail("dt", "must not exceed t_max");

    const auto s = cfg.scenario;
    if (s == Scenario::Zeno || s == Scenario::DiscreteZeno || s == Scenario::SteadyState)
        require(cfg.direction.has_value(), "direction");
    if (s == Scenario::Evolve || s == Scenario::Zeno || s == Scenario::DiscreteZeno)
        require(cfg.initial_state.has_value(), "initial_state");
    if (s == Scenario::DiscreteZeno) {
        require(cfg.delta_t.has_value(), "delta_t");
        if (!(*cfg.delta_t > 0.0)) fail("delta_t", "must be > 0");
        if (*cfg.delta_t > cfg.t_max) fail("delta_t", "must not exceed t_max");
    }
    if (cfg.initial_state) {
        if (const auto* named = std::get_if<NamedState>(&*cfg.initial_state)) {
            if ((*named == NamedState::PlusMu || *named == NamedState::MinusMu) && !cfg.direction)
                fail("direction", "required by initial_state plus-mu/minus-mu");
        }
    }
    if ((s == Scenario::Intelligent) && cfg.bath.n() == 0.0)
        fail("bath.N", "must be > 0 for the intelligent scenario");
    return cfg;
}

MeasurementDirection resolve_direction(const ScenarioConfig& cfg) {
    if (!cfg.direction) throw ConfigError("direction: missing required field");
    if (const auto* d = std::get_if<MeasurementDirection>(&*cfg.direction)) return *d;
    const auto opt = optimal_directions(cfg.bath);
    return std::get<OptimalChoice>(*cfg.direction) == OptimalChoice::First ? opt.first : opt.second;
}

DensityMatrix resolve_initial_state(const ScenarioConfig& cfg) {
    if (!cfg.initial_state) throw ConfigError("initial_state: missing required field");
    if (const auto* b = std::get_if<BlochVector>(&*cfg.initial_state)) return bloch_to_density(*b);
    switch (std::get<NamedState>(*cfg.initial_state)) {
    case NamedState::PlusMu: return DensityMatrix::pure(direction_eigenstates(resolve_direction(cfg)).plus);
    case NamedState::MinusMu: return DensityMatrix::pure(direction_eigenstates(resolve_direction(cfg)).minus);
    case NamedState::Excited: return DensityMatrix::pure(StateVector2::excited());
    case NamedState::Ground: return DensityMatrix::pure(StateVector2::ground());
    case NamedState::Mixed: return DensityMatrix::maximally_mixed();
    }
    throw ConfigError("initial_state: unknown state");
}

std::string intelligent_report_json(const BathParams& p, const IntelligentStatePair& states) {
    const json doc = {{"bath", {{"N", rounded(p.n())}, {"gamma", rounded(p.gamma())}, {"psi", rounded(p.psi())}}},
                      {"states", json::array({report_json(states.first), report_json(states.second)})}};
    return doc.dump(2) + "\n";
}

std::string steady_state_json(const DensityMatrix& rho) {
    const BlochVector b = density_to_bloch(rho);
    const json doc = {{"rx", rounded(b.x)}, {"ry", rounded(b.y)}, {"rz", rounded(b.z)}};
    return doc.dump(2) + "\n";
}

void run_scenario(const ScenarioConfig& cfg, std::ostream& out) {
    switch (cfg.scenario) {
    case Scenario::Landscape:
        write_csv(out, landscape_scan(cfg.bath, cfg.phi_count, cfg.theta_count));
        return;
    case Scenario::Evolve:
        write_csv(out, integrate(SuperoperatorForm::expanded(), cfg.bath, resolve_initial_state(cfg), cfg.t_max,
                                 cfg.dt));
        return;
    case Scenario::Zeno: {
        const MeasurementDirection dir = resolve_direction(cfg);
        const DensityMatrix rho0 = resolve_initial_state(cfg);
        const Matrix2 sigma_mu = spin_direction_operator(dir);
        const TimeSeries free = integrate(SuperoperatorForm::expanded(), cfg.bath, rho0, cfg.t_max, cfg.dt);
        const MeasuredSeries monitored = monitored_evolution(cfg.bath, dir, rho0, cfg.t_max, cfg.dt);
        out << "t,sigma_mu_no_measurement,sigma_mu_with_measurement\n";
        for (std::size_t i = 0; i < free.samples.size(); ++i) {
            const double unmeasured = expectation(sigma_mu, bloch_to_density(free.samples[i].bloch));
            out << format_number(free.samples[i].t) << ',' << format_number(unmeasured) << ','
                << format_number(monitored.samples[i].sigma_mu_mean) << '\n';
        }
        return;
    }
    case Scenario::DiscreteZeno: {
        const double delta_t = *cfg.delta_t;
        const long steps = std::max(1L, std::lround(cfg.t_max / delta_t));
        write_csv(out, discrete_zeno_protocol(cfg.bath, resolve_direction(cfg), resolve_initial_state(cfg),
                                              delta_t, steps));
        return;
    }
    case Scenario::Intelligent:
        out << intelligent_report_json(cfg.bath, eigenstates_of_S(cfg.bath));
        return;
    case Scenario::SteadyState:
        out << steady_state_json(steady_state_under_measurement(cfg.bath, resolve_direction(cfg)));
        return;
    }
}

} // namespace zeno
