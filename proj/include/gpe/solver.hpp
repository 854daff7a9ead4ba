#pragma once
// Second-order Strang split-step spectral integrator for the dimensionless
// GPE with a prescribed time-dependent potential.
//
// One step over dt starting at time t:
//   1. half kinetic step: spectrum *= exp(-i k^2 dt / 4)
//   2. potential step at the midpoint time: psi *= exp(-i [V(x, t+dt/2) + g|psi|^2] dt)
//   3. half kinetic step again.
// Every substep is a pointwise unitary factor, so the norm is preserved to
// rounding. |psi|^2 is constant during the potential substep (pure phase
// rotation), which makes freezing it at substep start exact.

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gpe/diagnostics.hpp"
#include "gpe/exact.hpp"
#include "gpe/fft.hpp"
#include "gpe/units.hpp"
#include "gpe/wavefunction.hpp"

namespace gpe::solver {

enum class EvolutionMode {
    nonlinear,  // V = x^2/2 + V_L(x,t), plus g1d |psi|^2
    linear      // V = x^2/2 + mu, no nonlinear term
};

struct BlowUpError : std::runtime_error {
    double time;
    explicit BlowUpError(double t);
};

struct Snapshot {
    double time = 0.0;
    analysis::Diagnostics diag;
    WaveFunction state;
};

struct Trajectory {
    std::vector<Snapshot> snapshots;
    std::size_t stride = 1;
    std::optional<double> blow_up_time;   // set when evolution aborted on NaN/Inf
    bool boundary_leak_warning = false;   // any snapshot failed the edge-density check
};

// Fills v with the external potential at time t (no nonlinear term).
using PotentialFn = std::function<void(std::span<const double> x, double t,
                                       std::span<double> v)>;

// Owns the FFT plans and scratch buffers for repeated stepping on one grid.
class StrangStepper {
public:
    StrangStepper(std::shared_ptr<const Grid> grid, EvolutionMode mode,
                  const SimParams& params);
    // Arbitrary prescribed potential; g_eff multiplies |psi|^2.
    StrangStepper(std::shared_ptr<const Grid> grid, PotentialFn potential,
                  double g_eff);

    // Advances psi by dt in place (dt may be negative for reversed evolution).
    // Throws BlowUpError when a non-finite value appears.
    void step(WaveFunction& psi, double dt);

private:
    std::shared_ptr<const Grid> grid_;
    PotentialFn potential_;
    double g_eff_;
    Fft fft_;
    std::vector<std::complex<double>> spec_;
    std::vector<std::complex<double>> kinetic_phase_;
    double kinetic_dt_ = 0.0;
    std::vector<double> v_;
    std::vector<double> rho_;
    std::vector<double> theta_;

    void refresh_kinetic(double dt);
};

// One Strang step as a pure function of the input state.
WaveFunction strang_step(const WaveFunction& psi, double dt, EvolutionMode mode,
                         const SimParams& params);

// Repeated stepping to t_end with a snapshot every `stride` steps plus the
// final state. A shorter final step is taken when dt does not divide the
// horizon. Blow-up stops the evolution and is recorded on the trajectory with
// the last valid snapshot retained.
Trajectory evolve(const WaveFunction& psi0, double t_end, double dt,
                  EvolutionMode mode, const SimParams& params, std::size_t stride);

// Default stride giving ~200 snapshots per period 2*pi.
std::size_t default_stride(double dt);

// Initial state helper: exact psi_n(.,t0) sampled on a grid built from params.
WaveFunction exact_state(const SimParams& params, double t0);

}  // namespace gpe::solver
