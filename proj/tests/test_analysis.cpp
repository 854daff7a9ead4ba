#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <complex>
#include <vector>

#include "gpe/analysis.hpp"
#include "gpe/constants.hpp"
#include "gpe/fft.hpp"
#include "gpe/solver.hpp"

using namespace gpe;
using Complex = std::complex<double>;

namespace {

SimParams reference_params(double g = 56.55, int n = 0) {
    SimParams p;
    p.g1d = g;
    p.mu = 10.0;
    p.x0 = 10.0;
    p.mode_index = n;
    p.grid_halfwidth = 20.0;
    p.grid_points = 2048;
    p.dt = 1e-3;
    return p;
}

SimParams mild_params(double g, int n) {
    SimParams p;
    p.g1d = g;
    p.mu = 0.0;
    p.x0 = 1.0;
    p.mode_index = n;
    p.grid_halfwidth = 20.0;
    p.grid_points = 2048;
    p.dt = 1e-3;
    return p;
}

solver::Trajectory closed_form_period(const SimParams& params, double t0 = 0.0) {
    solver::Trajectory traj;
    traj.stride = 1;
    for (const double t : {t0, t0 + constants::two_pi}) {
        solver::Snapshot s;
        s.state = solver::exact_state(params, t);
        s.time = t;
        s.diag = analysis::diagnostics(s.state);
        traj.snapshots.push_back(std::move(s));
    }
    return traj;
}

}  // namespace

TEST_CASE("diagnostics of the exact states") {
    const auto psi = solver::exact_state(reference_params(), 0.0);
    const auto d = analysis::diagnostics(psi);
    CHECK(d.norm == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(d.center == doctest::Approx(10.0).epsilon(1e-10));
    CHECK(d.width == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
    CHECK(d.peak_position == doctest::Approx(10.0).epsilon(1e-9));

    // center tracks x0 cos t to quadrature precision through the whole cycle
    for (const int n : {0, 1}) {
        for (int i = 0; i < 32; ++i) {
            const double t = constants::two_pi * i / 32.0;
            const auto state = solver::exact_state(reference_params(56.55, n), t);
            CHECK(std::abs(analysis::diagnostics(state).center - 10.0 * std::cos(t)) <
                  1e-9);
        }
    }

    const auto quarter = solver::exact_state(reference_params(), 0.5 * constants::pi);
    const auto dq = analysis::diagnostics(quarter);
    CHECK(std::abs(dq.center) < 1e-9);
    CHECK(std::abs(dq.peak_position) < 1e-9);

    WaveFunction zero;
    zero.grid = psi.grid;
    zero.values.assign(psi.values.size(), Complex(0.0, 0.0));
    CHECK_THROWS_AS(analysis::diagnostics(zero), std::domain_error);
}

TEST_CASE("parabolic peak refinement beats the grid resolution") {
    // place the packet center off the mesh: x0 not a multiple of dx
    SimParams p = reference_params();
    p.x0 = 10.0 + 0.37 * (2.0 * p.grid_halfwidth / p.grid_points);
    p.grid_halfwidth = 20.0;
    const auto psi = solver::exact_state(p, 0.0);
    const auto d = analysis::diagnostics(psi);
    CHECK(std::abs(d.peak_position - p.x0) < 1e-4);  // << dx = 0.0195
}

TEST_CASE("balance residual of exact pairings") {
    for (int n = 0; n <= 10; ++n)
        for (const double g : {56.55, -56.55}) {
            SimParams p = reference_params(g, n);
            for (int i = 0; i < 16; ++i)
                CHECK(analysis::balance_residual(p, constants::two_pi * i / 16.0) < 1e-12);
        }
    SimParams free = reference_params(0.0);
    CHECK(analysis::balance_residual(free, 0.7) == 0.0);
}

TEST_CASE("balance residual detects a shifted state") {
    const SimParams p = reference_params();
    const double delta = 0.1;

    WaveFunction shifted = solver::exact_state(p, 0.0);
    std::vector<double> xs(shifted.grid->nodes);
    for (auto& x : xs) x -= delta;
    exact::sample_state(exact::ExactStateParams::from(p), xs, 0.0, shifted.values);

    const double res = analysis::balance_residual(p, 0.0, shifted);

    // independent oracle: g * max |h0^2(u - delta) - h0^2(u)| on a fine mesh
    double expected = 0.0;
    const double rt_pi = std::sqrt(constants::pi);
    for (double u = -6.0; u <= 6.0; u += 1e-4) {
        const double diff = std::exp(-(u - delta) * (u - delta)) - std::exp(-u * u);
        expected = std::max(expected, 56.55 * std::abs(diff) / rt_pi);
    }
    CHECK(res > 0.1);
    CHECK(res == doctest::Approx(expected).epsilon(1e-4));
}

TEST_CASE("pde residual vanishes at second order in dt_fd") {
    for (const int n : {0, 1}) {
        const SimParams p = mild_params(56.55, n);
        const double r1 = analysis::pde_residual(p, 0.7, 1e-3);
        const double r2 = analysis::pde_residual(p, 0.7, 5e-4);
        const double r3 = analysis::pde_residual(p, 0.7, 2.5e-4);
        CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.1));
        CHECK(r2 / r3 == doctest::Approx(4.0).epsilon(0.1));
        CHECK(analysis::pde_residual(p, 0.7, 1e-4) < 1e-5);
    }
    // order 2 also at the reference drive, where the absolute scale is larger
    const SimParams strong = reference_params();
    const double q1 = analysis::pde_residual(strong, 0.7, 1e-3);
    const double q3 = analysis::pde_residual(strong, 0.7, 2.5e-4);
    CHECK(std::log2(q1 / q3) / 2.0 == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("pde residual detects a denormalized state") {
    // residual of 1.1*psi reduces to |1.1 - 1.1^3| g sqrt(int |psi|^6 dx);
    // evaluate the same quantity with test-local spectral machinery
    const SimParams p = reference_params();
    const auto ep = exact::ExactStateParams::from(p);
    const auto grid = Grid::make(p.grid_halfwidth, p.grid_points);
    const std::size_t m = grid->points;
    const double t = 0.4, h = 1e-5, scale = 1.1;

    std::vector<Complex> psi(m), plus(m), minus(m), spec(m), d2(m);
    exact::sample_state(ep, grid->nodes, t, psi);
    exact::sample_state(ep, grid->nodes, t + h, plus);
    exact::sample_state(ep, grid->nodes, t - h, minus);
    Fft fft(m);
    fft.forward(psi, spec);
    for (std::size_t j = 0; j < m; ++j) {
        const double k = grid->wavenumbers[j];
        spec[j] *= -k * k;
    }
    fft.inverse(spec, d2);

    double acc = 0.0;
    const Complex iu(0.0, 1.0);
    for (std::size_t j = 0; j < m; ++j) {
        const double x = grid->nodes[j];
        const double v = 0.5 * x * x + exact::laser_potential(ep, x, t);
        const Complex r = iu * scale * (plus[j] - minus[j]) / (2.0 * h) +
                          0.5 * scale * d2[j] -
                          (v + p.g1d * std::norm(scale * psi[j])) * scale * psi[j];
        acc += std::norm(r);
    }
    const double residual = std::sqrt(acc * grid->dx);

    // analytic magnitude: int |h_0|^6 dx = 1/(pi*sqrt(3))
    const double expected = std::abs(scale - scale * scale * scale) * p.g1d *
                            std::sqrt(1.0 / (constants::pi * std::sqrt(3.0)));
    CHECK(residual == doctest::Approx(expected).epsilon(1e-3));
}

TEST_CASE("curvature classification: well vs barrier") {
    const double expected_rep = 1.0 + 2.0 * 56.55 / std::sqrt(constants::pi);
    const SimParams rep = reference_params(+56.55);
    for (int i = 0; i < 32; ++i) {
        const auto r = analysis::curvature_at_center(rep, constants::two_pi * i / 32.0);
        CHECK(r.classification == analysis::Curvature::well);
        CHECK(r.second_derivative ==
              doctest::Approx(expected_rep).epsilon(1e-10));
    }

    const double expected_att = 1.0 - 2.0 * 56.55 / std::sqrt(constants::pi);
    const SimParams att = reference_params(-56.55);
    for (const double t : {0.5 * constants::pi, 1.5 * constants::pi}) {
        const auto r = analysis::curvature_at_center(att, t);
        CHECK(r.classification == analysis::Curvature::barrier);
        CHECK(r.second_derivative == doctest::Approx(expected_att).epsilon(1e-10));
    }

    const SimParams bare = reference_params(0.0);
    const auto r0 = analysis::curvature_at_center(bare, 1.0);
    CHECK(r0.classification == analysis::Curvature::well);
    CHECK(r0.second_derivative == doctest::Approx(1.0).epsilon(1e-9));

    CHECK_THROWS_AS(analysis::curvature_at_center(reference_params(56.55, 1), 0.0),
                    std::invalid_argument);
}

TEST_CASE("floquet check on closed-form trajectories") {
    for (int n = 0; n <= 5; ++n)
        for (const double mu : {0.0, 10.0}) {
            SimParams p = reference_params(56.55, n);
            p.mu = mu;
            const auto fl = analysis::floquet_check(p, closed_form_period(p));
            CHECK(fl.density_error < 1e-12);
            CHECK(fl.phase_error < 1e-12);
        }

    // half-integer quasienergy for mu=10, n=0: overlap factor is exactly -1
    const SimParams p = reference_params();
    const auto traj = closed_form_period(p);
    const Complex ov = analysis::overlap(traj.snapshots.front().state,
                                         traj.snapshots.back().state);
    CHECK(ov.real() == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(std::abs(ov.imag()) < 1e-9);

    solver::Trajectory too_short;
    too_short.snapshots.push_back(traj.snapshots.front());
    CHECK_THROWS_AS(analysis::floquet_check(p, too_short), std::invalid_argument);
}

TEST_CASE("floquet check on the numerically evolved soliton") {
    const SimParams p = reference_params();
    const auto psi0 = solver::exact_state(p, 0.0);
    const auto traj = solver::evolve(psi0, constants::two_pi, p.dt,
                                     solver::EvolutionMode::nonlinear, p, 31);
    const auto fl = analysis::floquet_check(p, traj);
    CHECK(fl.density_error < 5e-6);
    CHECK(fl.phase_error < 5e-5);
}

TEST_CASE("phase-removed distance ignores a global phase") {
    const auto a = solver::exact_state(reference_params(), 0.0);
    WaveFunction b = a;
    for (auto& v : b.values) v *= std::polar(1.0, 1.234);
    CHECK(analysis::phase_removed_l2_distance(a, b) < 1e-13);
    for (auto& v : b.values) v *= std::polar(1.0, -2.3);
    CHECK(analysis::phase_removed_l2_distance(b, a) < 1e-13);
}

TEST_CASE("band-limited noise is deterministic and band-limited") {
    const auto grid = Grid::make(20.0, 1024);
    const auto eta1 = analysis::band_limited_noise(*grid, 42);
    const auto eta2 = analysis::band_limited_noise(*grid, 42);
    CHECK(eta1 == eta2);
    const auto eta3 = analysis::band_limited_noise(*grid, 43);
    CHECK(eta1 != eta3);

    double peak = 0.0, mean = 0.0;
    for (const double v : eta1) {
        peak = std::max(peak, std::abs(v));
        mean += v;
    }
    CHECK(peak == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(mean) < 1e-9);

    // no spectral content above a quarter of the Nyquist wavenumber
    std::vector<Complex> field(eta1.begin(), eta1.end()), spec(eta1.size());
    Fft fft(eta1.size());
    fft.forward(field, spec);
    const double k_cut = 0.25 * constants::pi / grid->dx;
    for (std::size_t j = 0; j < spec.size(); ++j)
        if (std::abs(grid->wavenumbers[j]) > k_cut + 1e-12)
            CHECK(std::abs(spec[j]) < 1e-9);
}

TEST_CASE("stability probe: unperturbed repulsive run stays at truncation level") {
    SimParams p = reference_params(+56.55);
    p.dt = 2e-3;
    analysis::Perturbation none{analysis::Perturbation::Kind::center_shift, 0.0, 0};
    const auto rep = analysis::stability_probe(p, none, constants::two_pi);
    CHECK_FALSE(rep.blow_up_time.has_value());
    CHECK(rep.max_center_deviation < 1e-5);
    CHECK(rep.times.size() > 10);
    CHECK(rep.times.front() == 0.0);
}

TEST_CASE("stability probe: attractive deviation exceeds repulsive under one seed") {
    SimParams p = reference_params(+56.55);
    p.dt = 2e-3;
    analysis::Perturbation shift{analysis::Perturbation::Kind::center_shift, 0.1, 7};
    const auto rep = analysis::stability_probe(p, shift, constants::two_pi);
    p.g1d = -56.55;
    const auto att = analysis::stability_probe(p, shift, constants::two_pi);
    CHECK(att.max_center_deviation > rep.max_center_deviation);
    // repulsive: bounded oscillation in the well, same order as delta
    CHECK(rep.max_center_deviation < 1.0);
}

TEST_CASE("stability probe: noise perturbation is reproducible") {
    SimParams p = reference_params(+56.55);
    p.dt = 2e-3;
    analysis::Perturbation noise{analysis::Perturbation::Kind::amplitude_noise, 0.01, 1234};
    const auto a = analysis::stability_probe(p, noise, constants::two_pi);
    const auto b = analysis::stability_probe(p, noise, constants::two_pi);
    CHECK(a.center_deviation == b.center_deviation);
    CHECK(a.l2_deviation == b.l2_deviation);
    CHECK(a.max_center_deviation > 0.0);
}

TEST_CASE("stability probe input validation") {
    const SimParams p = reference_params();
    analysis::Perturbation shift{analysis::Perturbation::Kind::center_shift, 0.1, 0};
    CHECK_THROWS_AS(analysis::stability_probe(p, shift, 1.0), std::invalid_argument);
    shift.magnitude = -0.1;
    CHECK_THROWS_AS(analysis::stability_probe(p, shift, constants::two_pi),
                    std::invalid_argument);
}
