#include "gpe/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "gpe/constants.hpp"
#include "gpe/exact.hpp"
#include "gpe/fft.hpp"
#include "gpe/kernels.hpp"

namespace gpe::analysis {

using Complex = std::complex<double>;

Diagnostics diagnostics(const WaveFunction& psi) {
    if (!psi.grid || psi.values.size() != psi.grid->points)
        throw std::invalid_argument("diagnostics: malformed wavefunction");
    const auto& kern = kernels::active_table();
    const auto m =
        kern.density_moments(psi.values.data(), psi.grid->nodes.data(), psi.values.size());
    if (!(m.m0 > 0.0)) throw std::domain_error("diagnostics: zero-norm state");

    Diagnostics d;
    d.time = psi.time;
    d.norm = m.m0 * psi.grid->dx;
    d.center = m.m1 / m.m0;
    d.width = std::sqrt(std::max(0.0, m.m2 / m.m0 - d.center * d.center));

    // grid argmax of |psi|^2, then 3-point parabolic refinement
    std::size_t jmax = 0;
    double best = -1.0;
    for (std::size_t j = 0; j < psi.values.size(); ++j) {
        const double rho = std::norm(psi.values[j]);
        if (rho > best) {
            best = rho;
            jmax = j;
        }
    }
    d.peak_position = psi.grid->nodes[jmax];
    if (jmax > 0 && jmax + 1 < psi.values.size()) {
        const double ym = std::norm(psi.values[jmax - 1]);
        const double y0 = best;
        const double yp = std::norm(psi.values[jmax + 1]);
        const double denom = ym - 2.0 * y0 + yp;
        if (std::abs(denom) > 1e-300)
            d.peak_position += 0.5 * (ym - yp) / denom * psi.grid->dx;
    }
    return d;
}

double balance_residual(const SimParams& params, double t) {
    params.validate();
    const auto grid = Grid::make(params.grid_halfwidth, params.grid_points);
    const auto ep = exact::ExactStateParams::from(params);
    double worst = 0.0;
    for (const double x : grid->nodes) {
        const double vl = exact::laser_potential(ep, x, t);
        const double rho = std::norm(exact::coherent_state(ep, x, t));
        worst = std::max(worst, std::abs(vl + params.g1d * rho - params.mu));
    }
    return worst;
}

double balance_residual(const SimParams& params, double t, const WaveFunction& psi) {
    params.validate();
    if (!psi.grid || psi.values.size() != psi.grid->points)
        throw std::invalid_argument("balance_residual: malformed wavefunction");
    const auto ep = exact::ExactStateParams::from(params);
    double worst = 0.0;
    for (std::size_t j = 0; j < psi.values.size(); ++j) {
        const double vl = exact::laser_potential(ep, psi.grid->nodes[j], t);
        worst = std::max(worst,
                         std::abs(vl + params.g1d * std::norm(psi.values[j]) - params.mu));
    }
    return worst;
}

double pde_residual(const SimParams& params, double t, double dt_fd) {
    params.validate();
    if (!(dt_fd > 0.0)) throw std::invalid_argument("pde_residual: dt_fd must be > 0");
    const auto grid = Grid::make(params.grid_halfwidth, params.grid_points);
    const auto ep = exact::ExactStateParams::from(params);
    const std::size_t m = grid->points;

    std::vector<Complex> psi(m), plus(m), minus(m), spec(m), d2(m);
    exact::sample_state(ep, grid->nodes, t, psi);
    exact::sample_state(ep, grid->nodes, t + dt_fd, plus);
    exact::sample_state(ep, grid->nodes, t - dt_fd, minus);

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
        const Complex dpsi_dt = (plus[j] - minus[j]) / (2.0 * dt_fd);
        const Complex r =
            iu * dpsi_dt + 0.5 * d2[j] - (v + params.g1d * std::norm(psi[j])) * psi[j];
        acc += std::norm(r);
    }
    return std::sqrt(acc * grid->dx);
}

CurvatureResult curvature_at_center(const SimParams& params, double t) {
    params.validate();
    if (params.mode_index > 0)
        throw std::invalid_argument(
            "curvature_at_center: classification defined for n = 0 only");
    const auto grid = Grid::make(params.grid_halfwidth, params.grid_points);
    const auto ep = exact::ExactStateParams::from(params);
    const std::size_t m = grid->points;

    // Spectral second derivative of the laser profile, evaluated off-grid at
    // the packet center; the harmonic term contributes exactly 1.
    std::vector<double> vl(m);
    exact::sample_laser_potential(ep, grid->nodes, t, vl);
    std::vector<Complex> f(m), spec(m);
    for (std::size_t j = 0; j < m; ++j) f[j] = vl[j];
    Fft fft(m);
    fft.forward(f, spec);

    const double xc = params.x0 * std::cos(t);
    const double u = xc + grid->halfwidth;  // offset from the first node
    Complex sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double k = grid->wavenumbers[j];
        sum += spec[j] * (-k * k) * std::polar(1.0, k * u);
    }
    const double laser_dd = sum.real() / static_cast<double>(m);

    CurvatureResult out;
    out.second_derivative = 1.0 + laser_dd;
    if (std::abs(out.second_derivative) < 1e-9)
        out.classification = Curvature::flat;
    else
        out.classification =
            out.second_derivative > 0.0 ? Curvature::well : Curvature::barrier;
    return out;
}

std::complex<double> overlap(const WaveFunction& a, const WaveFunction& b) {
    if (!a.grid || !b.grid || a.values.size() != b.values.size())
        throw std::invalid_argument("overlap: mismatched states");
    const auto& kern = kernels::active_table();
    return kern.inner(a.values.data(), b.values.data(), a.values.size()) * a.grid->dx;
}

double phase_removed_l2_distance(const WaveFunction& a, const WaveFunction& b) {
    const Complex ov = overlap(b, a);  // theta = arg<b|a>
    const Complex s = std::abs(ov) > 0.0 ? ov / std::abs(ov) : Complex(1.0, 0.0);
    const auto& kern = kernels::active_table();
    const double sq =
        kern.scaled_sq_distance(a.values.data(), b.values.data(), s, a.values.size());
    return std::sqrt(sq * a.grid->dx);
}

FloquetResult floquet_check(const SimParams& params, const solver::Trajectory& traj) {
    if (traj.snapshots.size() < 2)
        throw std::invalid_argument("floquet_check: trajectory too short");
    const auto& first = traj.snapshots.front();
    const auto& last = traj.snapshots.back();
    if (std::abs((last.time - first.time) - constants::two_pi) > 1e-6)
        throw std::invalid_argument("floquet_check: trajectory must span exactly one period");

    const std::size_t m = first.state.values.size();
    const double dx = first.state.grid->dx;
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double d = std::norm(first.state.values[j]) - std::norm(last.state.values[j]);
        acc += d * d;
    }

    FloquetResult out;
    out.density_error = std::sqrt(acc * dx);
    const double energy = units::quasienergy(params.mode_index, params.mu);
    const Complex ov = overlap(first.state, last.state);
    out.phase_error =
        std::abs(std::remainder(std::arg(ov) + constants::two_pi * energy, constants::two_pi));
    return out;
}

std::vector<double> band_limited_noise(const Grid& grid, std::uint64_t seed) {
    const std::size_t m = grid.points;
    std::mt19937_64 eng(seed);
    auto uniform = [&eng]() {
        return static_cast<double>(eng() >> 11) * 0x1.0p-53;  // [0, 1)
    };
    // Box-Muller; hand-rolled so the stream does not depend on the stdlib.
    auto gaussian = [&]() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(constants::two_pi * u2);
    };

    const double k_cut = 0.25 * constants::pi / grid.dx;  // quarter Nyquist
    std::vector<Complex> spec(m, Complex(0.0, 0.0));
    for (std::size_t j = 1; j < m / 2; ++j) {
        if (std::abs(grid.wavenumbers[j]) > k_cut) break;
        const Complex c(gaussian(), gaussian());
        spec[j] = c;
        spec[m - j] = std::conj(c);
    }

    std::vector<Complex> field(m);
    Fft fft(m);
    fft.inverse(spec, field);

    std::vector<double> eta(m);
    double peak = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        eta[j] = field[j].real();
        peak = std::max(peak, std::abs(eta[j]));
    }
    if (peak > 0.0)
        for (auto& v : eta) v /= peak;
    return eta;
}

StabilityReport stability_probe(const SimParams& params, const Perturbation& pert,
                                double horizon) {
    params.validate();
    if (!(horizon >= constants::two_pi))
        throw std::invalid_argument("stability_probe: horizon must be >= one period");
    if (pert.magnitude < 0.0)
        throw std::invalid_argument("stability_probe: perturbation magnitude must be >= 0");

    const auto grid = Grid::make(params.grid_halfwidth, params.grid_points);
    const auto ep = exact::ExactStateParams::from(params);
    const auto& kern = kernels::active_table();

    WaveFunction psi0;
    psi0.grid = grid;
    psi0.values.resize(grid->points);
    psi0.time = 0.0;

    if (pert.kind == Perturbation::Kind::center_shift) {
        std::vector<double> shifted(grid->points);
        for (std::size_t j = 0; j < grid->points; ++j)
            shifted[j] = grid->nodes[j] - pert.magnitude;
        exact::sample_state(ep, shifted, 0.0, psi0.values);
    } else {
        exact::sample_state(ep, grid->nodes, 0.0, psi0.values);
        const auto eta = band_limited_noise(*grid, pert.seed);
        for (std::size_t j = 0; j < grid->points; ++j)
            psi0.values[j] *= 1.0 + pert.magnitude * eta[j];
        const auto m =
            kern.density_moments(psi0.values.data(), grid->nodes.data(), grid->points);
        kern.scale(psi0.values.data(), 1.0 / std::sqrt(m.m0 * grid->dx), grid->points);
    }

    const auto traj = solver::evolve(psi0, horizon, params.dt,
                                     solver::EvolutionMode::nonlinear, params,
                                     solver::default_stride(params.dt));

    StabilityReport rep;
    rep.g1d = params.g1d;
    rep.perturbation = pert;
    rep.seed = pert.seed;
    rep.blow_up_time = traj.blow_up_time;
    rep.times.reserve(traj.snapshots.size());

    WaveFunction ref;
    ref.grid = grid;
    ref.values.resize(grid->points);
    for (const auto& snap : traj.snapshots) {
        ref.time = snap.time;
        exact::sample_state(ep, grid->nodes, snap.time, ref.values);
        const double cdev = std::abs(snap.diag.center - params.x0 * std::cos(snap.time));
        const double ldev = phase_removed_l2_distance(snap.state, ref);
        rep.times.push_back(snap.time);
        rep.center_deviation.push_back(cdev);
        rep.l2_deviation.push_back(ldev);
        rep.max_center_deviation = std::max(rep.max_center_deviation, cdev);
        rep.max_l2_deviation = std::max(rep.max_l2_deviation, ldev);
    }
    return rep;
}

}  // namespace gpe::analysis
