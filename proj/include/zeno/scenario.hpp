// scenario.hpp: JSON scenario configs and their CSV/JSON artifacts

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "zeno/algebra.hpp"
#include "zeno/bath.hpp"
#include "zeno/intelligent.hpp"

namespace zeno {

// Malformed, incomplete or out-of-range configuration. what() starts with
// the offending field path, e.g. "bath.N: must be >= 0".
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Scenario { Landscape, Evolve, Zeno, DiscreteZeno, Intelligent, SteadyState };

enum class OptimalChoice { First, Second };
using DirectionSpec = std::variant<MeasurementDirection, OptimalChoice>;

enum class NamedState { PlusMu, MinusMu, Excited, Ground, Mixed };
using InitialStateSpec = std::variant<NamedState, BlochVector>;

struct ScenarioConfig {
    ScenarioConfig(Scenario s, const BathParams& b) : scenario(s), bath(b) {}

    Scenario scenario;
    BathParams bath;
    std::optional<DirectionSpec> direction;
    std::optional<InitialStateSpec> initial_state;
    double t_max = 5.0;
    double dt = 1e-3;
    std::optional<double> delta_t;
    std::size_t phi_count = 400;
    std::size_t theta_count = 200;
    std::optional<std::string> output_path;
};

// Strict parse: unknown keys, wrong types, missing required fields and
// out-of-range values all raise ConfigError.
ScenarioConfig parse_config(std::string_view json_text);

MeasurementDirection resolve_direction(const ScenarioConfig& cfg);
DensityMatrix resolve_initial_state(const ScenarioConfig& cfg);

// Runs the scenario and writes its artifact (CSV or JSON) to out.
// Module errors propagate as DomainError / NumericError.
void run_scenario(const ScenarioConfig& cfg, std::ostream& out);

// JSON documents with alphabetically ordered keys and numbers rounded to
// 12 significant digits.
std::string intelligent_report_json(const BathParams& p, const IntelligentStatePair& states);
std::string steady_state_json(const DensityMatrix& rho);

} // namespace zeno
