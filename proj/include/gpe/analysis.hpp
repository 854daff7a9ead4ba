#pragma once
// Verification diagnostics: balance and PDE residuals of the closed form,
// potential-curvature classification, Floquet periodicity checks, and the
// repulsive-vs-attractive stability probe.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "gpe/diagnostics.hpp"
#include "gpe/solver.hpp"
#include "gpe/units.hpp"

namespace gpe::analysis {

// max over grid nodes of |V_L(x,t) + g1d |psi_n(x,t)|^2 - mu|
double balance_residual(const SimParams& params, double t);

// same residual with an arbitrary state in place of the exact psi_n; nonzero
// whenever the density no longer matches the laser profile
double balance_residual(const SimParams& params, double t, const WaveFunction& psi);

// L2 norm of i dpsi/dt - [-psi''/2 + (x^2/2 + V_L + g1d|psi|^2) psi] for the
// closed-form state, with a centered finite-difference time derivative of
// half-width dt_fd and a spectral spatial derivative.
double pde_residual(const SimParams& params, double t, double dt_fd);

enum class Curvature { well, barrier, flat };

struct CurvatureResult {
    Curvature classification = Curvature::flat;
    double second_derivative = 0.0;  // V''(x_c), analytically 1 + 2 g1d/sqrt(pi)
};

// Curvature of the total potential at the packet center x_c = x0 cos t,
// computed by spectral differentiation of the sampled laser profile (the
// harmonic term contributes exactly 1). Single-soliton classification only:
// throws std::invalid_argument for n > 0.
CurvatureResult curvature_at_center(const SimParams& params, double t);

struct FloquetResult {
    double density_error = 0.0;  // L2 distance between |psi(t0)|^2 and |psi(t0+2pi)|^2
    double phase_error = 0.0;    // |arg<psi(t0)|psi(t0+2pi)> + 2 pi E_n| in (-pi, pi]
};

// Requires trajectory snapshots at t0 and t0 + 2*pi (first and last snapshot).
FloquetResult floquet_check(const SimParams& params, const solver::Trajectory& traj);

struct Perturbation {
    enum class Kind { center_shift, amplitude_noise };
    Kind kind = Kind::center_shift;
    double magnitude = 0.0;
    std::uint64_t seed = 0;  // used by amplitude_noise
};

struct StabilityReport {
    double g1d = 0.0;
    Perturbation perturbation;
    std::uint64_t seed = 0;
    std::vector<double> times;
    std::vector<double> center_deviation;  // |center(t) - x0 cos t|
    std::vector<double> l2_deviation;      // phase-removed L2 distance to exact psi_n
    double max_center_deviation = 0.0;
    double max_l2_deviation = 0.0;
    std::optional<double> blow_up_time;
};

// Evolves the perturbed exact state under the UNperturbed laser of the given
// params in nonlinear mode over [0, horizon]; blow-up is recorded, not thrown.
StabilityReport stability_probe(const SimParams& params, const Perturbation& pert,
                                double horizon);

// ---- shared helpers -------------------------------------------------------

// <a|b> by grid quadrature (includes dx).
std::complex<double> overlap(const WaveFunction& a, const WaveFunction& b);

// ||a - e^{i theta} b||_2 with theta = arg<b|a>, the global-phase-free distance.
double phase_removed_l2_distance(const WaveFunction& a, const WaveFunction& b);

// Band-limited unit-amplitude noise field (spectral cut at 1/4 Nyquist),
// deterministic in the seed. Used by the amplitude_noise perturbation.
std::vector<double> band_limited_noise(const Grid& grid, std::uint64_t seed);

}  // namespace gpe::analysis
