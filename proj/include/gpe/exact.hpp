#pragma once
// Closed-form coherent soliton family and the compensating laser potential.
//
// psi_n(x,t) = R_n(x,t) exp(i Theta_n(x,t)) with
//   R_n     = h_n(x - x0 cos t)                      (normalized Hermite function)
//   Theta_n = -[(1/2 + mu + n) t + x0 x sin t - (x0^2/4) sin 2t]
// and the laser profile that balances the interaction,
//   V_L(x,t) = mu - g1d R_n(x,t)^2.
// V_L is computed from R_n^2 itself, so V_L + g1d |psi_n|^2 = mu holds to
// machine precision by construction. Phases are never reduced mod 2*pi here.

#include <complex>
#include <span>

#include "gpe/hermite.hpp"
#include "gpe/units.hpp"

namespace gpe::exact {

struct ExactStateParams {
    int n = 0;
    double x0 = 0.0;
    double mu = 0.0;
    double g1d = 0.0;

    static ExactStateParams from(const SimParams& p) {
        return {p.mode_index, p.x0, p.mu, p.g1d};
    }
};

double amplitude(const ExactStateParams& p, double x, double t);
double phase(const ExactStateParams& p, double x, double t);
std::complex<double> coherent_state(const ExactStateParams& p, double x, double t);
double laser_potential(const ExactStateParams& p, double x, double t);
double total_potential(const ExactStateParams& p, double x, double t);

// Grid-sampling forms used by the solver and diagnostics; one trig evaluation
// of the packet center per call instead of one per point.
void sample_state(const ExactStateParams& p, std::span<const double> x, double t,
                  std::span<std::complex<double>> out);
void sample_laser_potential(const ExactStateParams& p, std::span<const double> x,
                            double t, std::span<double> out);

}  // namespace gpe::exact
