#include <doctest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gpe/csv.hpp"
#include "gpe/scenario.hpp"
#include "gpe/units.hpp"

namespace fs = std::filesystem;
using namespace gpe;
using scenario::load;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag)
        : path(fs::temp_directory_path() / ("gpesol_test_" + tag)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string write_config(const TempDir& dir, const std::string& body) {
    const fs::path p = dir.path / "config.json";
    std::ofstream out(p);
    out << body;
    out.close();
    return p.string();
}

}  // namespace

TEST_CASE("defaults are the reference scenario") {
    const auto cfg = load("", {}, std::nullopt, std::nullopt, std::nullopt);
    CHECK(cfg.sim.g1d == 56.55);
    CHECK(cfg.sim.mu == 10.0);
    CHECK(cfg.sim.x0 == 10.0);
    CHECK(cfg.sim.grid_points == 2048);
    CHECK(cfg.mode == "nonlinear");
}

TEST_CASE("config file with overrides") {
    TempDir dir("cfg");
    const auto path = write_config(dir, R"({
        "name": "demo",
        "seed": 99,
        "sim": {"g1d": -56.55, "mu": 10.0, "x0": 10.0, "n": 1,
                "grid_halfwidth": 20.0, "grid_points": 1024, "dt": 0.002}
    })");
    const auto cfg = load(path, {"sim.x0=8", "stability.magnitude=0.25"}, std::nullopt,
                          std::nullopt, std::nullopt);
    CHECK(cfg.name == "demo");
    CHECK(cfg.seed == 99);
    CHECK(cfg.sim.g1d == -56.55);
    CHECK(cfg.sim.x0 == 8.0);
    CHECK(cfg.sim.mode_index == 1);
    CHECK(cfg.sim.grid_points == 1024);
    CHECK(cfg.stability.magnitude == 0.25);

    CHECK_THROWS(load(path, {"nonsense"}, std::nullopt, std::nullopt, std::nullopt));
}

TEST_CASE("partial sim override keeps the reference defaults for other fields") {
    const auto cfg = load("", {"sim.dt=0.0005"}, std::nullopt, std::nullopt, std::nullopt);
    CHECK(cfg.sim.dt == 0.0005);
    CHECK(cfg.sim.g1d == 56.55);
    CHECK(cfg.sim.mu == 10.0);
    CHECK(cfg.sim.x0 == 10.0);
}

TEST_CASE("physical and sim blocks are mutually exclusive") {
    TempDir dir("excl");
    const auto path = write_config(dir, R"({
        "physical": {"atom_count": 1e4, "scattering_length": 1.5e-9,
                     "axial_freq": 20.0, "radial_freq": 800.0, "atomic_mass": 1.1708353e-26},
        "sim": {"g1d": 1.0}
    })");
    CHECK_THROWS_AS(load(path, {}, std::nullopt, std::nullopt, std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("physical block converts to g1d") {
    TempDir dir("phys");
    const auto path = write_config(dir, R"({
        "physical": {"atom_count": 1e4, "scattering_length": 1.5e-9,
                     "axial_freq": 20.0, "radial_freq": 800.0,
                     "atomic_mass": 1.1708353465829999e-26}
    })");
    const auto cfg = load(path, {}, std::nullopt, std::nullopt, std::nullopt);
    CHECK(cfg.sim.g1d == doctest::Approx(56.55).epsilon(0.005));
    CHECK(cfg.sim.mu == 10.0);  // laser knobs keep reference defaults
}

TEST_CASE("hz flag applies the angular conversion") {
    TempDir dir("hz");
    const auto path = write_config(dir, R"({
        "frequencies_in_hz": true,
        "physical": {"atom_count": 1e4, "scattering_length": 1.5e-9,
                     "axial_freq": 20.0, "radial_freq": 800.0,
                     "atomic_mass": 1.1708353465829999e-26}
    })");
    const auto cfg = load(path, {}, std::nullopt, std::nullopt, std::nullopt);
    REQUIRE(cfg.physical.has_value());
    CHECK(cfg.physical->axial_freq == doctest::Approx(125.66370614).epsilon(1e-9));
}

TEST_CASE("preset li7 matches the worked example") {
    const auto p = scenario::preset("li7");
    CHECK(units::interaction_strength(p) == doctest::Approx(56.55).epsilon(0.005));
    const auto m = scenario::preset("li7-attractive");
    CHECK(units::interaction_strength(m) == doctest::Approx(-56.55).epsilon(0.005));
    CHECK_THROWS_AS(scenario::preset("na23"), std::invalid_argument);
}

TEST_CASE("exact subcommand writes deterministic lattice files") {
    TempDir dir("exact");
    const auto path = write_config(dir, R"({
        "name": "probe",
        "sim": {"g1d": 56.55, "mu": 10.0, "x0": 10.0, "n": 0,
                "grid_halfwidth": 20.0, "grid_points": 256, "dt": 0.001},
        "lattice": {"nx": 11, "nt": 5}
    })");
    const auto out1 = (dir.path / "run1").string();
    const auto out2 = (dir.path / "run2").string();
    REQUIRE(scenario::run_exact(load(path, {}, std::nullopt, out1, std::nullopt)) == 0);
    REQUIRE(scenario::run_exact(load(path, {}, std::nullopt, out2, std::nullopt)) == 0);

    for (const char* name :
         {"probe_density.csv", "probe_laser.csv", "probe_total_potential.csv",
          "probe_psi.csv"}) {
        CAPTURE(name);
        REQUIRE(fs::exists(fs::path(out1) / name));
        const auto a = slurp(fs::path(out1) / name);
        CHECK(a == slurp(fs::path(out2) / name));
        CHECK(a.rfind("# generator = gpesol", 0) == 0);  // header block present
    }
}

TEST_CASE("evolve subcommand writes trajectory and final state") {
    TempDir dir("evolve");
    const auto path = write_config(dir, R"({
        "name": "ev",
        "sim": {"g1d": 0.0, "mu": 0.0, "x0": 0.0, "n": 0,
                "grid_halfwidth": 16.0, "grid_points": 256, "dt": 0.002},
        "evolution": {"t_end": 0.5, "stride": 50}
    })");
    const auto cfg = load(path, {}, std::nullopt, (dir.path / "out").string(), std::nullopt);
    REQUIRE(scenario::run_evolve(cfg) == 0);

    const auto traj = slurp(dir.path / "out" / "ev_trajectory.csv");
    CHECK(traj.find("t,norm,center,width,peak_position") != std::string::npos);
    const auto dump = slurp(dir.path / "out" / "ev_final_state.csv");
    // 256 data rows plus header block and column row
    std::size_t rows = 0;
    for (const char c : dump)
        if (c == '\n') ++rows;
    CHECK(rows > 256);
}

TEST_CASE("verify subcommand passes on a mild configuration") {
    TempDir dir("verify");
    const auto path = write_config(dir, R"({
        "name": "vf",
        "sim": {"g1d": 56.55, "mu": 0.0, "x0": 1.0, "n": 0,
                "grid_halfwidth": 16.0, "grid_points": 512, "dt": 0.002}
    })");
    const auto cfg = load(path, {}, std::nullopt, (dir.path / "out").string(), std::nullopt);
    REQUIRE(scenario::run_verify(cfg) == 0);

    const auto report = nlohmann::json::parse(slurp(dir.path / "out" / "vf_verify.json"));
    CHECK(report.at("status") == "pass");
    CHECK(report.at("checks").size() >= 8);
}

TEST_CASE("figures subcommand emits all panel datasets") {
    TempDir dir("figs");
    const auto path = write_config(dir, R"({
        "name": "figs",
        "sim": {"g1d": 56.55, "mu": 10.0, "x0": 10.0, "n": 0,
                "grid_halfwidth": 20.0, "grid_points": 256, "dt": 0.001},
        "lattice": {"nx": 21, "nt": 9}
    })");
    const auto cfg = load(path, {}, std::nullopt, (dir.path / "out").string(), std::nullopt);
    REQUIRE(scenario::run_figures(cfg) == 0);

    const char* expected[] = {
        "fig1a_density.csv",   "fig1b_density.csv",   "fig2a_laser.csv",
        "fig2b_laser.csv",     "fig2c_laser.csv",     "fig2d_laser.csv",
        "fig3a_gdensity.csv",  "fig3a_potential.csv", "fig3b_gdensity.csv",
        "fig3b_potential.csv", "fig3c_gdensity.csv",  "fig3c_potential.csv",
        "fig3d_gdensity.csv",  "fig3d_potential.csv", "fig4a_gdensity.csv",
        "fig4a_potential.csv", "fig4b_gdensity.csv",  "fig4b_potential.csv",
        "fig4c_gdensity.csv",  "fig4c_potential.csv", "fig4d_gdensity.csv",
        "fig4d_potential.csv"};
    for (const char* name : expected) {
        CAPTURE(name);
        CHECK(fs::exists(dir.path / "out" / name));
    }
}

TEST_CASE("format_double round-trips text deterministically") {
    CHECK(io::format_double(0.1) == "0.10000000000000001");
    CHECK(io::format_double(1.0) == "1");
    CHECK(io::format_double(-2.5e-17) == "-2.4999999999999999e-17");
}
