#include "gpe/scenario.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "gpe/analysis.hpp"
#include "gpe/constants.hpp"
#include "gpe/csv.hpp"
#include "gpe/exact.hpp"
#include "gpe/kernels.hpp"
#include "gpe/solver.hpp"

namespace gpe::scenario {

using json = nlohmann::json;
namespace fs = std::filesystem;

units::PhysicalParams preset(const std::string& name) {
    using constants::proton_mass;
    if (name == "li7" || name == "li7-repulsive")
        return {1e4, 1.5e-9, 20.0, 800.0, 7.0 * proton_mass};
    if (name == "li7-attractive")
        return {1e4, -1.5e-9, 20.0, 800.0, 7.0 * proton_mass};
    throw std::invalid_argument("unknown preset: " + name);
}

namespace {

double get_num(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    return j.at(key).get<double>();
}

void apply_override(json& root, const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0)
        throw std::invalid_argument("override must look like section.key=value: " + spec);
    const std::string path = spec.substr(0, eq);
    const std::string raw = spec.substr(eq + 1);

    json value;
    try {
        value = json::parse(raw);
    } catch (const json::exception&) {
        value = raw;  // plain string
    }

    json* node = &root;
    std::size_t pos = 0;
    while (true) {
        const auto dot = path.find('.', pos);
        const std::string key = path.substr(pos, dot - pos);
        if (key.empty()) throw std::invalid_argument("bad override path: " + spec);
        if (dot == std::string::npos) {
            (*node)[key] = value;
            break;
        }
        node = &(*node)[key];
        pos = dot + 1;
    }
}

// Fields missing from the config keep the values of `base` (the reference
// scenario), so a partial "sim" block or a --set override touches only what
// it names.
SimParams sim_from_json(const json& j, SimParams base) {
    base.g1d = get_num(j, "g1d", base.g1d);
    base.mu = get_num(j, "mu", base.mu);
    base.x0 = get_num(j, "x0", base.x0);
    base.mode_index = static_cast<int>(get_num(j, "n", base.mode_index));
    base.grid_halfwidth = get_num(j, "grid_halfwidth", base.grid_halfwidth);
    base.grid_points = static_cast<std::size_t>(
        get_num(j, "grid_points", static_cast<double>(base.grid_points)));
    base.dt = get_num(j, "dt", base.dt);
    return base;
}

// Reference scenario (the 7Li benchmark drive); the default when a config does not pin a field.
SimParams default_sim() {
    SimParams p;
    p.g1d = 56.55;
    p.mu = 10.0;
    p.x0 = 10.0;
    p.mode_index = 0;
    p.grid_halfwidth = 20.0;
    p.grid_points = 2048;
    p.dt = 1e-3;
    return p;
}

std::string out_path(const ScenarioConfig& cfg, const std::string& file) {
    fs::create_directories(cfg.output_dir);
    return (fs::path(cfg.output_dir) / file).string();
}

solver::EvolutionMode mode_of(const ScenarioConfig& cfg) {
    if (cfg.mode == "nonlinear") return solver::EvolutionMode::nonlinear;
    if (cfg.mode == "linear") return solver::EvolutionMode::linear;
    throw std::invalid_argument("mode must be nonlinear or linear: " + cfg.mode);
}

}  // namespace

std::vector<std::string> ScenarioConfig::header_lines() const {
    using io::format_double;
    std::vector<std::string> lines;
    lines.push_back("generator = gpesol");
    lines.push_back("name = " + name);
    lines.push_back("seed = " + std::to_string(seed));
    lines.push_back("mode = " + mode);
    lines.push_back("kernels = " + std::string(kernels::active_table().name));
    if (physical) {
        lines.push_back("physical: N = " + format_double(physical->atom_count) +
                        ", a_s = " + format_double(physical->scattering_length) +
                        " m, omega_x = " + format_double(physical->axial_freq) +
                        " rad/s, omega_r = " + format_double(physical->radial_freq) +
                        " rad/s, mass = " + format_double(physical->atomic_mass) + " kg");
    }
    lines.push_back("sim: g1d = " + format_double(sim.g1d) + ", mu = " +
                    format_double(sim.mu) + ", x0 = " + format_double(sim.x0) +
                    ", n = " + std::to_string(sim.mode_index) +
                    ", L = " + format_double(sim.grid_halfwidth) +
                    ", M = " + std::to_string(sim.grid_points) +
                    ", dt = " + format_double(sim.dt));
    lines.push_back("evolution: t_end = " + format_double(evolution.t_end) +
                    ", dt = " + format_double(evolution.dt.value_or(sim.dt)) + ", stride = " +
                    std::to_string(evolution.stride.value_or(
                        solver::default_stride(evolution.dt.value_or(sim.dt)))));
    lines.push_back("lattice: nx = " + std::to_string(lattice.nx) +
                    ", nt = " + std::to_string(lattice.nt) +
                    ", x = [" + format_double(lattice.x_min.value_or(-(sim.x0 + 5.0))) +
                    ", " + format_double(lattice.x_max.value_or(sim.x0 + 5.0)) +
                    "], t = [" + format_double(lattice.t_min) + ", " +
                    format_double(lattice.t_max) + "]");
    lines.push_back("stability: kind = " + stability.kind +
                    ", magnitude = " + format_double(stability.magnitude) +
                    ", horizon = " + format_double(stability.horizon));
    lines.push_back(
        "tolerances: balance = " + format_double(tolerances.balance) +
        ", norm = " + format_double(tolerances.norm) +
        ", pde_residual = " + format_double(tolerances.pde_residual) +
        ", pde_order = [" + format_double(tolerances.pde_order_low) + ", " +
        format_double(tolerances.pde_order_high) +
        "], floquet_density = " + format_double(tolerances.floquet_density) +
        ", floquet_phase = " + format_double(tolerances.floquet_phase) +
        ", norm_drift = " + format_double(tolerances.norm_drift));
    return lines;
}

static json config_json(const ScenarioConfig& cfg) {
    json j;
    j["name"] = cfg.name;
    j["seed"] = cfg.seed;
    j["mode"] = cfg.mode;
    j["kernels"] = kernels::active_table().name;
    if (cfg.physical) {
        j["physical"] = {{"atom_count", cfg.physical->atom_count},
                         {"scattering_length", cfg.physical->scattering_length},
                         {"axial_freq", cfg.physical->axial_freq},
                         {"radial_freq", cfg.physical->radial_freq},
                         {"atomic_mass", cfg.physical->atomic_mass}};
    }
    j["sim"] = {{"g1d", cfg.sim.g1d},
                {"mu", cfg.sim.mu},
                {"x0", cfg.sim.x0},
                {"n", cfg.sim.mode_index},
                {"grid_halfwidth", cfg.sim.grid_halfwidth},
                {"grid_points", cfg.sim.grid_points},
                {"dt", cfg.sim.dt}};
    j["evolution"] = {{"t_end", cfg.evolution.t_end},
                      {"dt", cfg.evolution.dt.value_or(cfg.sim.dt)},
                      {"stride", cfg.evolution.stride.value_or(solver::default_stride(
                                     cfg.evolution.dt.value_or(cfg.sim.dt)))}};
    j["stability"] = {{"kind", cfg.stability.kind},
                      {"magnitude", cfg.stability.magnitude},
                      {"horizon", cfg.stability.horizon}};
    return j;
}

ScenarioConfig load(const std::string& config_path,
                    const std::vector<std::string>& overrides,
                    const std::optional<std::string>& preset_name,
                    const std::optional<std::string>& output_dir,
                    const std::optional<std::uint64_t>& seed) {
    json root = json::object();
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::runtime_error("cannot open config: " + config_path);
        try {
            in >> root;
        } catch (const json::exception& e) {
            throw std::runtime_error("malformed config " + config_path + ": " + e.what());
        }
        if (!root.is_object()) throw std::runtime_error("config must be a JSON object");
    }
    for (const auto& ov : overrides) apply_override(root, ov);

    ScenarioConfig cfg;
    cfg.name = root.value("name", cfg.name);
    cfg.mode = root.value("mode", cfg.mode);
    cfg.seed = root.value("seed", cfg.seed);
    cfg.frequencies_in_hz = root.value("frequencies_in_hz", cfg.frequencies_in_hz);

    if (const char* env = std::getenv("GPESOL_OUT")) cfg.output_dir = env;
    cfg.output_dir = root.value("output_dir", cfg.output_dir);
    if (output_dir) cfg.output_dir = *output_dir;
    if (seed) cfg.seed = *seed;

    const bool has_physical = root.contains("physical") || preset_name.has_value();
    const bool has_sim = root.contains("sim");
    if (has_physical && has_sim)
        throw std::invalid_argument(
            "config must give exactly one of 'physical' and 'sim' parameter blocks");

    cfg.sim = default_sim();
    if (has_physical) {
        units::PhysicalParams p;
        if (preset_name) {
            p = preset(*preset_name);
        } else {
            const json& ph = root.at("physical");
            p.atom_count = get_num(ph, "atom_count", 0.0);
            p.scattering_length = get_num(ph, "scattering_length", 0.0);
            p.axial_freq = get_num(ph, "axial_freq", 0.0);
            p.radial_freq = get_num(ph, "radial_freq", 0.0);
            p.atomic_mass = get_num(ph, "atomic_mass", 0.0);
            // laser / discretization knobs are not derivable from trap data
            cfg.sim.mu = get_num(ph, "mu", cfg.sim.mu);
            cfg.sim.x0 = get_num(ph, "x0", cfg.sim.x0);
            cfg.sim.mode_index = static_cast<int>(get_num(ph, "n", cfg.sim.mode_index));
            cfg.sim.grid_halfwidth = get_num(ph, "grid_halfwidth", cfg.sim.grid_halfwidth);
            cfg.sim.grid_points = static_cast<std::size_t>(
                get_num(ph, "grid_points", static_cast<double>(cfg.sim.grid_points)));
            cfg.sim.dt = get_num(ph, "dt", cfg.sim.dt);
        }
        if (cfg.frequencies_in_hz) {
            p.axial_freq *= constants::two_pi;
            p.radial_freq *= constants::two_pi;
        }
        p.validate();
        cfg.physical = p;
        cfg.sim.g1d = units::interaction_strength(p);
    } else if (has_sim) {
        cfg.sim = sim_from_json(root.at("sim"), cfg.sim);
        cfg.sim_given = true;
    }
    cfg.sim.validate();

    if (root.contains("evolution")) {
        const json& ev = root.at("evolution");
        cfg.evolution.t_end = get_num(ev, "t_end", cfg.evolution.t_end);
        if (ev.contains("dt")) cfg.evolution.dt = ev.at("dt").get<double>();
        if (ev.contains("stride"))
            cfg.evolution.stride = ev.at("stride").get<std::size_t>();
    }
    if (root.contains("lattice")) {
        const json& la = root.at("lattice");
        cfg.lattice.nx = static_cast<std::size_t>(get_num(la, "nx", 201));
        cfg.lattice.nt = static_cast<std::size_t>(get_num(la, "nt", 201));
        if (la.contains("x_min")) cfg.lattice.x_min = la.at("x_min").get<double>();
        if (la.contains("x_max")) cfg.lattice.x_max = la.at("x_max").get<double>();
        cfg.lattice.t_min = get_num(la, "t_min", cfg.lattice.t_min);
        cfg.lattice.t_max = get_num(la, "t_max", cfg.lattice.t_max);
    }
    if (root.contains("stability")) {
        const json& st = root.at("stability");
        cfg.stability.kind = st.value("kind", cfg.stability.kind);
        cfg.stability.magnitude = get_num(st, "magnitude", cfg.stability.magnitude);
        cfg.stability.horizon = get_num(st, "horizon", cfg.stability.horizon);
    }
    if (root.contains("tolerances")) {
        const json& to = root.at("tolerances");
        auto& t = cfg.tolerances;
        t.balance = get_num(to, "balance", t.balance);
        t.norm = get_num(to, "norm", t.norm);
        t.pde_residual = get_num(to, "pde_residual", t.pde_residual);
        t.pde_order_low = get_num(to, "pde_order_low", t.pde_order_low);
        t.pde_order_high = get_num(to, "pde_order_high", t.pde_order_high);
        t.floquet_density = get_num(to, "floquet_density", t.floquet_density);
        t.floquet_phase = get_num(to, "floquet_phase", t.floquet_phase);
        t.norm_drift = get_num(to, "norm_drift", t.norm_drift);
    }
    if (cfg.lattice.nx < 2 || cfg.lattice.nt < 2)
        throw std::invalid_argument("lattice must have at least 2 points per axis");
    return cfg;
}

// ---------------------------------------------------------------------------
// exact: sample the closed form on an (x,t) lattice
// ---------------------------------------------------------------------------

int run_exact(const ScenarioConfig& cfg) {
    const auto ep = exact::ExactStateParams::from(cfg.sim);
    const auto& la = cfg.lattice;
    const double x_lo = la.x_min.value_or(-(cfg.sim.x0 + 5.0));
    const double x_hi = la.x_max.value_or(cfg.sim.x0 + 5.0);
    const double dxl = (x_hi - x_lo) / static_cast<double>(la.nx - 1);
    const double dtl = (la.t_max - la.t_min) / static_cast<double>(la.nt - 1);

    const auto header = cfg.header_lines();
    io::CsvWriter density(out_path(cfg, cfg.name + "_density.csv"), header, {"t", "x", "value"});
    io::CsvWriter laser(out_path(cfg, cfg.name + "_laser.csv"), header, {"t", "x", "value"});
    io::CsvWriter total(out_path(cfg, cfg.name + "_total_potential.csv"), header,
                        {"t", "x", "value"});
    io::CsvWriter psi(out_path(cfg, cfg.name + "_psi.csv"), header, {"t", "x", "re", "im"});

    for (std::size_t it = 0; it < la.nt; ++it) {
        const double t = la.t_min + static_cast<double>(it) * dtl;
        for (std::size_t ix = 0; ix < la.nx; ++ix) {
            const double x = x_lo + static_cast<double>(ix) * dxl;
            const auto value = exact::coherent_state(ep, x, t);
            const double vl = exact::laser_potential(ep, x, t);
            density.row({t, x, std::norm(value)});
            laser.row({t, x, vl});
            total.row({t, x, 0.5 * x * x + vl});
            psi.row({t, x, value.real(), value.imag()});
        }
    }
    density.close();
    laser.close();
    total.close();
    psi.close();
    return 0;
}

// ---------------------------------------------------------------------------
// evolve: run the solver, dump diagnostics and the final state
// ---------------------------------------------------------------------------

int run_evolve(const ScenarioConfig& cfg) {
    const double dt = cfg.evolution.dt.value_or(cfg.sim.dt);
    const std::size_t stride = cfg.evolution.stride.value_or(solver::default_stride(dt));

    const auto psi0 = solver::exact_state(cfg.sim, 0.0);
    const auto traj =
        solver::evolve(psi0, cfg.evolution.t_end, dt, mode_of(cfg), cfg.sim, stride);

    auto header = cfg.header_lines();
    if (traj.blow_up_time)
        header.push_back("blow_up_at = " + io::format_double(*traj.blow_up_time));
    if (traj.boundary_leak_warning)
        header.push_back("warning = boundary density exceeded 1e-8 of peak");

    io::CsvWriter diag(out_path(cfg, cfg.name + "_trajectory.csv"), header,
                       {"t", "norm", "center", "width", "peak_position"});
    for (const auto& s : traj.snapshots)
        diag.row({s.time, s.diag.norm, s.diag.center, s.diag.width, s.diag.peak_position});
    diag.close();

    const auto& last = traj.snapshots.back().state;
    io::CsvWriter dump(out_path(cfg, cfg.name + "_final_state.csv"), header,
                       {"x", "re", "im"});
    for (std::size_t j = 0; j < last.values.size(); ++j)
        dump.row({last.grid->nodes[j], last.values[j].real(), last.values[j].imag()});
    dump.close();

    if (traj.blow_up_time) {
        std::cerr << "evolve: numerical blow-up at t = " << *traj.blow_up_time << "\n";
        return 2;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify: residuals, Floquet and norm checks against configured tolerances
// ---------------------------------------------------------------------------

namespace {

struct Check {
    std::string name;
    double value;
    double tolerance;
    bool pass;
};

solver::Trajectory closed_form_period(const SimParams& params) {
    solver::Trajectory traj;
    traj.stride = 1;
    for (const double t : {0.0, constants::two_pi}) {
        solver::Snapshot s;
        s.state = solver::exact_state(params, t);
        s.time = t;
        s.diag = analysis::diagnostics(s.state);
        traj.snapshots.push_back(std::move(s));
    }
    return traj;
}

// least-squares slope of log(value) against log(h)
double fit_order(const std::vector<std::pair<double, double>>& pts) {
    double mx = 0.0, my = 0.0;
    for (const auto& [h, v] : pts) {
        mx += std::log(h);
        my += std::log(v);
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double num = 0.0, den = 0.0;
    for (const auto& [h, v] : pts) {
        num += (std::log(h) - mx) * (std::log(v) - my);
        den += (std::log(h) - mx) * (std::log(h) - mx);
    }
    return num / den;
}

}  // namespace

int run_verify(const ScenarioConfig& cfg) {
    const auto& tol = cfg.tolerances;
    std::vector<Check> checks;
    auto add = [&checks](const std::string& name, double value, double tolerance) {
        checks.push_back({name, value, tolerance, value <= tolerance});
    };

    // balance identity over 16 phases of the drive
    double balance = 0.0;
    for (int i = 0; i < 16; ++i)
        balance = std::max(
            balance, analysis::balance_residual(cfg.sim, constants::two_pi * i / 16.0));
    add("balance_residual_max", balance, tol.balance);

    // closed-form normalization
    const auto psi0 = solver::exact_state(cfg.sim, 0.0);
    add("exact_norm_error", std::abs(analysis::diagnostics(psi0).norm - 1.0), tol.norm);

    // PDE residual: second-order decay in dt_fd, then smallness
    const double t_probe = 0.7;
    std::vector<std::pair<double, double>> pts;
    for (const double h : {1e-3, 5e-4, 2.5e-4})
        pts.emplace_back(h, analysis::pde_residual(cfg.sim, t_probe, h));
    const double order = fit_order(pts);
    checks.push_back({"pde_residual_order", order, tol.pde_order_low,
                      order >= tol.pde_order_low && order <= tol.pde_order_high});
    add("pde_residual_at_1e-4", analysis::pde_residual(cfg.sim, t_probe, 1e-4),
        tol.pde_residual);

    // Floquet periodicity of the closed form
    const auto exact_fl = analysis::floquet_check(cfg.sim, closed_form_period(cfg.sim));
    add("floquet_density_error_exact", exact_fl.density_error, 1e-12);
    add("floquet_phase_error_exact", exact_fl.phase_error, 1e-12);

    // Floquet periodicity and norm conservation of the numerical evolution
    const double dt = cfg.evolution.dt.value_or(cfg.sim.dt);
    const auto traj = solver::evolve(psi0, constants::two_pi, dt, mode_of(cfg), cfg.sim,
                                     solver::default_stride(dt));
    if (traj.blow_up_time) {
        checks.push_back({"numerical_blow_up", *traj.blow_up_time, 0.0, false});
    } else {
        const auto num_fl = analysis::floquet_check(cfg.sim, traj);
        add("floquet_density_error_numerical", num_fl.density_error, tol.floquet_density);
        add("floquet_phase_error_numerical", num_fl.phase_error, tol.floquet_phase);
        add("norm_drift",
            std::abs(traj.snapshots.back().diag.norm - traj.snapshots.front().diag.norm),
            tol.norm_drift);
    }

    bool all_pass = true;
    json report;
    report["config"] = config_json(cfg);
    report["config"]["tolerances"] = {{"balance", tol.balance},
                                      {"norm", tol.norm},
                                      {"pde_residual", tol.pde_residual},
                                      {"pde_order", {tol.pde_order_low, tol.pde_order_high}},
                                      {"floquet_density", tol.floquet_density},
                                      {"floquet_phase", tol.floquet_phase},
                                      {"norm_drift", tol.norm_drift}};
    report["checks"] = json::array();
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        report["checks"].push_back(
            {{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass}});
        std::printf("%-36s %12.5e  tol %9.2e  %s\n", c.name.c_str(), c.value, c.tolerance,
                    c.pass ? "pass" : "FAIL");
    }
    report["status"] = all_pass ? "pass" : "fail";

    std::ofstream out(out_path(cfg, cfg.name + "_verify.json"), std::ios::binary);
    out << report.dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write verify report");
    std::printf("status: %s\n", all_pass ? "pass" : "fail");
    return all_pass ? 0 : 2;
}

// ---------------------------------------------------------------------------
// figures: standard panel datasets
// ---------------------------------------------------------------------------

namespace {

void surface_csv(const ScenarioConfig& cfg, const std::string& file,
                 const exact::ExactStateParams& ep, bool density) {
    const auto& la = cfg.lattice;
    const double x_lo = la.x_min.value_or(-(cfg.sim.x0 + 5.0));
    const double x_hi = la.x_max.value_or(cfg.sim.x0 + 5.0);
    const double dxl = (x_hi - x_lo) / static_cast<double>(la.nx - 1);
    const double dtl = (la.t_max - la.t_min) / static_cast<double>(la.nt - 1);
    io::CsvWriter w(out_path(cfg, file), cfg.header_lines(), {"t", "x", "value"});
    for (std::size_t it = 0; it < la.nt; ++it) {
        const double t = la.t_min + static_cast<double>(it) * dtl;
        for (std::size_t ix = 0; ix < la.nx; ++ix) {
            const double x = x_lo + static_cast<double>(ix) * dxl;
            if (density) {
                const double a = exact::amplitude(ep, x, t);
                w.row({t, x, a * a});
            } else {
                w.row({t, x, exact::laser_potential(ep, x, t)});
            }
        }
    }
    w.close();
}

void profile_csv(const ScenarioConfig& cfg, const std::string& file,
                 const exact::ExactStateParams& ep, double t, bool scaled_density) {
    const auto& la = cfg.lattice;
    const double x_lo = la.x_min.value_or(-(cfg.sim.x0 + 5.0));
    const double x_hi = la.x_max.value_or(cfg.sim.x0 + 5.0);
    const double dxl = (x_hi - x_lo) / static_cast<double>(la.nx - 1);
    io::CsvWriter w(out_path(cfg, file), cfg.header_lines(), {"t", "x", "value"});
    for (std::size_t ix = 0; ix < la.nx; ++ix) {
        const double x = x_lo + static_cast<double>(ix) * dxl;
        if (scaled_density) {
            const double a = exact::amplitude(ep, x, t);
            w.row({t, x, ep.g1d * a * a});
        } else {
            w.row({t, x, exact::total_potential(ep, x, t)});
        }
    }
    w.close();
}

}  // namespace

int run_figures(const ScenarioConfig& cfg) {
    const double g = std::abs(cfg.sim.g1d);
    const double mu = cfg.sim.mu;
    const double x0 = cfg.sim.x0;
    using EP = exact::ExactStateParams;

    // Fig. 1: densities of the n = 0 and n = 1 states (interaction-independent)
    surface_csv(cfg, "fig1a_density.csv", EP{0, x0, mu, g}, true);
    surface_csv(cfg, "fig1b_density.csv", EP{1, x0, mu, g}, true);

    // Fig. 2: laser profiles for both signs and both modes
    surface_csv(cfg, "fig2a_laser.csv", EP{0, x0, mu, +g}, false);
    surface_csv(cfg, "fig2b_laser.csv", EP{0, x0, mu, -g}, false);
    surface_csv(cfg, "fig2c_laser.csv", EP{1, x0, mu, +g}, false);
    surface_csv(cfg, "fig2d_laser.csv", EP{1, x0, mu, -g}, false);

    // Figs. 3 and 4: profiles of g1d R^2 and the total potential at four times
    const double times[4] = {0.0, 0.5 * constants::pi, constants::pi, 1.25 * constants::pi};
    const char suffix[4] = {'a', 'b', 'c', 'd'};
    for (int i = 0; i < 4; ++i) {
        const std::string s(1, suffix[i]);
        profile_csv(cfg, "fig3" + s + "_gdensity.csv", EP{0, x0, mu, +g}, times[i], true);
        profile_csv(cfg, "fig3" + s + "_potential.csv", EP{0, x0, mu, +g}, times[i], false);
        profile_csv(cfg, "fig4" + s + "_gdensity.csv", EP{0, x0, mu, -g}, times[i], true);
        profile_csv(cfg, "fig4" + s + "_potential.csv", EP{0, x0, mu, -g}, times[i], false);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// stability: paired repulsive/attractive probes with one seed
// ---------------------------------------------------------------------------

int run_stability(const ScenarioConfig& cfg) {
    analysis::Perturbation pert;
    if (cfg.stability.kind == "center_shift")
        pert.kind = analysis::Perturbation::Kind::center_shift;
    else if (cfg.stability.kind == "amplitude_noise")
        pert.kind = analysis::Perturbation::Kind::amplitude_noise;
    else
        throw std::invalid_argument("stability.kind must be center_shift or amplitude_noise");
    pert.magnitude = cfg.stability.magnitude;
    pert.seed = cfg.seed;

    json summary;
    summary["config"] = config_json(cfg);
    summary["seed"] = cfg.seed;
    summary["kind"] = cfg.stability.kind;
    summary["magnitude"] = cfg.stability.magnitude;
    summary["horizon"] = cfg.stability.horizon;

    double max_dev[2] = {0.0, 0.0};
    const char* labels[2] = {"repulsive", "attractive"};
    for (int i = 0; i < 2; ++i) {
        SimParams params = cfg.sim;
        params.g1d = (i == 0 ? +1.0 : -1.0) * std::abs(cfg.sim.g1d);
        const auto rep = analysis::stability_probe(params, pert, cfg.stability.horizon);

        auto header = cfg.header_lines();
        header.push_back(std::string("branch = ") + labels[i] +
                         ", g1d = " + io::format_double(params.g1d));
        io::CsvWriter w(out_path(cfg, cfg.name + "_stability_" + labels[i] + ".csv"), header,
                        {"t", "center_deviation", "l2_deviation"});
        for (std::size_t j = 0; j < rep.times.size(); ++j)
            w.row({rep.times[j], rep.center_deviation[j], rep.l2_deviation[j]});
        w.close();

        max_dev[i] = rep.max_center_deviation;
        json branch;
        branch["g1d"] = params.g1d;
        branch["max_center_deviation"] = rep.max_center_deviation;
        branch["max_l2_deviation"] = rep.max_l2_deviation;
        branch["blew_up"] = rep.blow_up_time.has_value();
        if (rep.blow_up_time) branch["blow_up_time"] = *rep.blow_up_time;
        summary[labels[i]] = branch;
    }
    summary["attractive_exceeds_repulsive"] = max_dev[1] > max_dev[0];

    std::ofstream out(out_path(cfg, cfg.name + "_stability_summary.json"), std::ios::binary);
    out << summary.dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write stability summary");
    std::printf("max center deviation: repulsive %.6e, attractive %.6e\n", max_dev[0],
                max_dev[1]);
    return 0;
}

// ---------------------------------------------------------------------------
// convert: physical -> dimensionless echo
// ---------------------------------------------------------------------------

int run_convert(const ScenarioConfig& cfg) {
    if (!cfg.physical) {
        std::cerr << "convert requires a 'physical' parameter block or --preset\n";
        return 1;
    }
    const auto& p = *cfg.physical;
    const auto l = units::oscillator_lengths(p);
    const double g1d = units::interaction_strength(p);
    const double energy = units::quasienergy(cfg.sim.mode_index, cfg.sim.mu);

    std::printf("l_x  = %.6e m  (%.4f um)\n", l.axial, l.axial * 1e6);
    std::printf("l_r  = %.6e m  (%.4f um)\n", l.radial, l.radial * 1e6);
    std::printf("g1d  = %.6f\n", g1d);
    std::printf("E_n  = %.6f hbar*omega_x  (n = %d, mu = %g)\n", energy, cfg.sim.mode_index,
                cfg.sim.mu);
    std::printf("omega_r/omega_x = %.4f\n", p.radial_freq / p.axial_freq);
    if (p.quasi1d_questionable())
        std::printf("warning: omega_r/omega_x < 10, quasi-1D reduction questionable\n");
    return 0;
}

}  // namespace gpe::scenario
