#include "gpe/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "gpe/constants.hpp"
#include "gpe/kernels.hpp"

namespace gpe {

bool WaveFunction::finite() const {
    for (const auto& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

bool WaveFunction::boundary_leak() const {
    if (values.empty()) return false;
    double max_sq = 0.0;
    for (const auto& v : values) max_sq = std::max(max_sq, std::norm(v));
    if (max_sq == 0.0) return false;
    const double edge_sq = std::max(std::norm(values.front()), std::norm(values.back()));
    return edge_sq >= 1e-16 * max_sq;
}

}  // namespace gpe

namespace gpe::solver {

using Complex = std::complex<double>;

BlowUpError::BlowUpError(double t)
    : std::runtime_error("numerical blow-up at t = " + std::to_string(t)), time(t) {}

namespace {

PotentialFn make_potential(EvolutionMode mode, const SimParams& params) {
    if (mode == EvolutionMode::linear) {
        const double mu = params.mu;
        return [mu](std::span<const double> x, double, std::span<double> v) {
            for (std::size_t j = 0; j < x.size(); ++j) v[j] = 0.5 * x[j] * x[j] + mu;
        };
    }
    const auto ep = exact::ExactStateParams::from(params);
    return [ep](std::span<const double> x, double t, std::span<double> v) {
        exact::sample_laser_potential(ep, x, t, v);
        for (std::size_t j = 0; j < x.size(); ++j) v[j] = 0.5 * x[j] * x[j] + v[j];
    };
}

}  // namespace

StrangStepper::StrangStepper(std::shared_ptr<const Grid> grid, EvolutionMode mode,
                             const SimParams& params)
    : StrangStepper(std::move(grid), make_potential(mode, params),
                    mode == EvolutionMode::nonlinear ? params.g1d : 0.0) {}

StrangStepper::StrangStepper(std::shared_ptr<const Grid> grid, PotentialFn potential,
                             double g_eff)
    : grid_(std::move(grid)),
      potential_(std::move(potential)),
      g_eff_(g_eff),
      fft_(grid_->points),
      spec_(grid_->points),
      kinetic_phase_(grid_->points),
      v_(grid_->points),
      rho_(grid_->points),
      theta_(grid_->points) {}

void StrangStepper::refresh_kinetic(double dt) {
    const auto& k = grid_->wavenumbers;
    for (std::size_t j = 0; j < k.size(); ++j)
        kinetic_phase_[j] = std::polar(1.0, -0.25 * k[j] * k[j] * dt);
    kinetic_dt_ = dt;
}

void StrangStepper::step(WaveFunction& psi, double dt) {
    if (psi.grid.get() != grid_.get())
        throw std::invalid_argument("StrangStepper: wavefunction uses a different grid");
    if (dt == 0.0 || !std::isfinite(dt))
        throw std::invalid_argument("StrangStepper: bad time step");
    if (dt != kinetic_dt_) refresh_kinetic(dt);

    const auto& kern = kernels::active_table();
    const std::size_t m = grid_->points;

    // half kinetic
    fft_.forward(psi.values, spec_);
    kern.cmul(spec_.data(), kinetic_phase_.data(), m);
    fft_.inverse(spec_, psi.values);

    // full potential + nonlinear step at the midpoint time
    kern.abs2(psi.values.data(), rho_.data(), m);
    potential_(grid_->nodes, psi.time + 0.5 * dt, v_);
    kern.potential_theta(theta_.data(), v_.data(), rho_.data(), g_eff_, dt, m);
    kern.phase_apply(psi.values.data(), theta_.data(), m);

    // half kinetic
    fft_.forward(psi.values, spec_);
    kern.cmul(spec_.data(), kinetic_phase_.data(), m);
    fft_.inverse(spec_, psi.values);

    psi.time += dt;
    if (!psi.finite()) throw BlowUpError(psi.time);
}

WaveFunction strang_step(const WaveFunction& psi, double dt, EvolutionMode mode,
                         const SimParams& params) {
    if (!(dt > 0.0)) throw std::invalid_argument("strang_step: dt must be > 0");
    WaveFunction out = psi;
    StrangStepper stepper(out.grid, mode, params);
    stepper.step(out, dt);
    return out;
}

std::size_t default_stride(double dt) {
    const double per_period = constants::two_pi / dt;
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(per_period / 200.0)));
}

WaveFunction exact_state(const SimParams& params, double t0) {
    params.validate();
    WaveFunction psi;
    psi.grid = Grid::make(params.grid_halfwidth, params.grid_points);
    psi.values.resize(params.grid_points);
    psi.time = t0;
    exact::sample_state(exact::ExactStateParams::from(params), psi.grid->nodes, t0,
                        psi.values);
    return psi;
}

Trajectory evolve(const WaveFunction& psi0, double t_end, double dt,
                  EvolutionMode mode, const SimParams& params, std::size_t stride) {
    if (!(t_end > psi0.time)) throw std::invalid_argument("evolve: t_end must exceed start time");
    if (!(dt > 0.0)) throw std::invalid_argument("evolve: dt must be > 0");
    if (stride == 0) throw std::invalid_argument("evolve: stride must be >= 1");
    if (!psi0.finite()) throw std::invalid_argument("evolve: non-finite initial state");

    const double t0 = psi0.time;
    const double span = t_end - t0;
    auto n_full = static_cast<long long>(std::floor(span / dt + 1e-9));
    double tail = span - static_cast<double>(n_full) * dt;
    if (tail < dt * 1e-9) tail = 0.0;

    Trajectory traj;
    traj.stride = stride;

    WaveFunction psi = psi0;
    StrangStepper stepper(psi.grid, mode, params);

    auto record = [&](const WaveFunction& state) {
        Snapshot snap;
        snap.time = state.time;
        snap.diag = analysis::diagnostics(state);
        snap.state = state;
        traj.boundary_leak_warning = traj.boundary_leak_warning || state.boundary_leak();
        traj.snapshots.push_back(std::move(snap));
    };

    try {
        for (long long i = 0; i < n_full; ++i) {
            if (static_cast<std::size_t>(i) % stride == 0) record(psi);
            stepper.step(psi, dt);
            psi.time = t0 + static_cast<double>(i + 1) * dt;  // no accumulation drift
        }
        if (tail > 0.0) {
            if (static_cast<std::size_t>(n_full) % stride == 0) record(psi);
            stepper.step(psi, tail);
            psi.time = t_end;
        }
        record(psi);
    } catch (const BlowUpError& e) {
        traj.blow_up_time = e.time;
        if (traj.snapshots.empty()) record(psi0);
    }
    return traj;
}

}  // namespace gpe::solver
