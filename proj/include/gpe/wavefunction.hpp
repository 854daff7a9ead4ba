#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "gpe/grid.hpp"

namespace gpe {

struct WaveFunction {
    std::shared_ptr<const Grid> grid;
    std::vector<std::complex<double>> values;
    double time = 0.0;

    // Soft validity check: physically meaningful states decay to ~0 before the
    // periodic boundary. True when edge magnitude exceeds 1e-8 * max magnitude.
    bool boundary_leak() const;
    bool finite() const;
};

}  // namespace gpe
