#pragma once

#include "gpe/wavefunction.hpp"

namespace gpe::analysis {

// Per-snapshot scalar diagnostics from grid quadrature.
struct Diagnostics {
    double norm = 0.0;           // integral |psi|^2 dx
    double center = 0.0;         // integral x |psi|^2 dx / norm
    double width = 0.0;          // sqrt(<x^2> - <x>^2)
    double peak_position = 0.0;  // argmax |psi|^2, parabolic refinement
    double time = 0.0;
};

Diagnostics diagnostics(const WaveFunction& psi);  // throws on zero norm

}  // namespace gpe::analysis
