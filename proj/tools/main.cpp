// gpesol: coherent bright-soliton toolkit for the driven 1D GPE.
//
//   gpesol {exact|evolve|verify|figures|stability|convert}
//          [--config file.json] [--out dir] [--seed N] [--preset name]
//          [--set section.key=value ...]
//
// Exit codes: 0 success, 1 validation failure, 2 numerical failure.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpe/scenario.hpp"
#include "gpe/solver.hpp"

int main(int argc, char** argv) {
    CLI::App app{"coherent bright solitons in a laser-driven 1D GPE"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    std::optional<std::string> preset_name;
    std::optional<std::string> out_dir;
    std::optional<std::uint64_t> seed;

    const std::map<std::string, std::function<int(const gpe::scenario::ScenarioConfig&)>>
        handlers = {
            {"exact", gpe::scenario::run_exact},
            {"evolve", gpe::scenario::run_evolve},
            {"verify", gpe::scenario::run_verify},
            {"figures", gpe::scenario::run_figures},
            {"stability", gpe::scenario::run_stability},
            {"convert", gpe::scenario::run_convert},
        };
    const std::map<std::string, std::string> descriptions = {
        {"exact", "sample the closed-form state and potentials on an (x,t) lattice"},
        {"evolve", "run the split-step solver and dump trajectory diagnostics"},
        {"verify", "residual, Floquet and norm checks against configured tolerances"},
        {"figures", "emit the standard figure-panel datasets"},
        {"stability", "paired repulsive/attractive perturbation probes"},
        {"convert", "print dimensionless parameters for physical trap settings"},
    };

    std::string chosen;
    for (const auto& [name, fn] : handlers) {
        auto* sub = app.add_subcommand(name, descriptions.at(name));
        sub->add_option("--config,-c", config_path, "JSON configuration file");
        sub->add_option("--out,-o", out_dir, "output directory (default: GPESOL_OUT or .)");
        sub->add_option("--seed", seed, "random seed override");
        sub->add_option("--preset", preset_name, "physical preset: li7, li7-attractive");
        sub->add_option("--set", overrides, "override config fields, e.g. --set sim.x0=5");
        sub->callback([&chosen, name = name] { chosen = name; });
        (void)fn;
    }

    CLI11_PARSE(app, argc, argv);

    try {
        const auto cfg =
            gpe::scenario::load(config_path, overrides, preset_name, out_dir, seed);
        return handlers.at(chosen)(cfg);
    } catch (const gpe::solver::BlowUpError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
