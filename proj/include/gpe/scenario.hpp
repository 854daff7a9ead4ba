#pragma once
// Scenario runner behind the CLI: config parsing, presets, and the exact /
// evolve / verify / figures / stability / convert subcommands. Kept out of
// tools/main.cpp so tests can drive subcommands without a subprocess.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpe/units.hpp"

namespace gpe::scenario {

struct EvolutionSettings {
    double t_end = 6.283185307179586;  // one trap period
    std::optional<double> dt;          // defaults to SimParams.dt
    std::optional<std::size_t> stride; // defaults to ~200 snapshots / period
};

struct LatticeSettings {
    std::size_t nx = 201;
    std::size_t nt = 201;
    std::optional<double> x_min, x_max;  // default: +-(x0 + 5)
    double t_min = 0.0;
    double t_max = 6.283185307179586;
};

struct StabilitySettings {
    std::string kind = "center_shift";  // or "amplitude_noise"
    double magnitude = 0.1;
    double horizon = 12.566370614359172;  // two periods
};

struct Tolerances {
    double balance = 1e-12;
    double norm = 1e-8;
    double pde_residual = 1e-3;
    double pde_order_low = 1.8;
    double pde_order_high = 2.2;
    double floquet_density = 1e-5;
    double floquet_phase = 1e-4;
    double norm_drift = 1e-10;
};

struct ScenarioConfig {
    std::string name = "run";
    std::string output_dir = ".";
    std::uint64_t seed = 1;
    std::string mode = "nonlinear";  // or "linear"

    // Exactly one of physical/sim is given in the config file; after load()
    // `sim` always holds the resolved dimensionless parameters.
    std::optional<units::PhysicalParams> physical;
    bool frequencies_in_hz = false;
    SimParams sim;
    bool sim_given = false;

    EvolutionSettings evolution;
    LatticeSettings lattice;
    StabilitySettings stability;
    Tolerances tolerances;

    // Header comment lines with every resolved value, for output provenance.
    std::vector<std::string> header_lines() const;
};

// Named PhysicalParams presets (the 7Li experiment of the worked example).
// Known names: "li7", "li7-attractive". Throws std::invalid_argument otherwise.
units::PhysicalParams preset(const std::string& name);

// Parses a JSON config file; `overrides` are dotted key=value pairs applied on
// top (e.g. "sim.x0=5"). Empty path loads defaults (requires preset or
// overrides to form a complete config). Throws std::runtime_error /
// std::invalid_argument on malformed input.
ScenarioConfig load(const std::string& config_path,
                    const std::vector<std::string>& overrides,
                    const std::optional<std::string>& preset_name,
                    const std::optional<std::string>& output_dir,
                    const std::optional<std::uint64_t>& seed);

// Subcommand entry points; return process exit codes
// (0 ok, 1 validation failure, 2 numerical failure).
int run_exact(const ScenarioConfig& cfg);
int run_evolve(const ScenarioConfig& cfg);
int run_verify(const ScenarioConfig& cfg);
int run_figures(const ScenarioConfig& cfg);
int run_stability(const ScenarioConfig& cfg);
int run_convert(const ScenarioConfig& cfg);

}  // namespace gpe::scenario
