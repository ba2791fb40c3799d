// zeno_cli: run one scenario config and write its CSV/JSON artifact.
//
//   zeno_cli --config scenario.json [--output path] [--quiet]
//
// Exit status: 0 success, 2 configuration error, 3 numeric/invariant failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zeno/errors.hpp"
#include "zeno/scenario.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw zeno::ConfigError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Total quantum Zeno effect scenarios for a two-level system in a squeezed bath"};
    std::string config_path;
    std::string output_path;
    bool quiet = false;
    app.add_option("--config", config_path, "Scenario config (JSON)")->required();
    app.add_option("--output", output_path, "Artifact path (overrides output_path in the config)");
    app.add_flag("--quiet", quiet, "Suppress progress messages");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    zeno::ScenarioConfig cfg = [&] {
        try {
            return zeno::parse_config(read_file(config_path));
        } catch (const zeno::ConfigError& e) {
            std::cerr << "zeno_cli: " << e.what() << '\n';
            std::exit(kExitConfig);
        }
    }();
    if (!output_path.empty()) cfg.output_path = output_path;

    // Render fully before touching the output file so a failed run leaves no partial artifact.
    std::ostringstream artifact;
    try {
        zeno::run_scenario(cfg, artifact);
    } catch (const zeno::ConfigError& e) {
        std::cerr << "zeno_cli: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "zeno_cli: " << e.what() << '\n';
        return kExitNumeric;
    }

    if (!cfg.output_path) {
        std::cout << artifact.str();
        return 0;
    }
    std::ofstream out(*cfg.output_path, std::ios::binary);
    if (!out || !(out << artifact.str())) {
        std::cerr << "zeno_cli: cannot write '" << *cfg.output_path << "'\n";
        return kExitConfig;
    }
    if (!quiet) std::cerr << "zeno_cli: wrote " << *cfg.output_path << '\n';
    return 0;
}
