#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace gpe {

// Uniform periodic mesh on [-L, L) with its spectral wavenumbers.
// Nodes x_j = -L + j dx, dx = 2L/M. Wavenumbers in standard FFT order with
// spacing pi/L; the Nyquist bin at j = M/2 carries +pi/dx.
struct Grid {
    double halfwidth = 0.0;
    std::size_t points = 0;
    double dx = 0.0;
    std::vector<double> nodes;
    std::vector<double> wavenumbers;

    static std::shared_ptr<const Grid> make(double halfwidth, std::size_t points);
};

}  // namespace gpe
