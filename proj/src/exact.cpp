#include "gpe/exact.hpp"

#include <cmath>

namespace gpe::exact {

double amplitude(const ExactStateParams& p, double x, double t) {
    return hermite_function(p.n, x - p.x0 * std::cos(t));
}

double phase(const ExactStateParams& p, double x, double t) {
    return -((0.5 + p.mu + p.n) * t + p.x0 * x * std::sin(t) -
             0.25 * p.x0 * p.x0 * std::sin(2.0 * t));
}

std::complex<double> coherent_state(const ExactStateParams& p, double x, double t) {
    return std::polar(1.0, phase(p, x, t)) * amplitude(p, x, t);
}

double laser_potential(const ExactStateParams& p, double x, double t) {
    const double a = amplitude(p, x, t);
    return p.mu - p.g1d * a * a;
}

double total_potential(const ExactStateParams& p, double x, double t) {
    return 0.5 * x * x + laser_potential(p, x, t);
}

void sample_state(const ExactStateParams& p, std::span<const double> x, double t,
                  std::span<std::complex<double>> out) {
    const double c = p.x0 * std::cos(t);
    const double st = p.x0 * std::sin(t);
    const double common = (0.5 + p.mu + p.n) * t - 0.25 * p.x0 * p.x0 * std::sin(2.0 * t);
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double amp = hermite_function(p.n, x[j] - c);
        out[j] = std::polar(1.0, -(common + st * x[j])) * amp;
    }
}

void sample_laser_potential(const ExactStateParams& p, std::span<const double> x,
                            double t, std::span<double> out) {
    const double c = p.x0 * std::cos(t);
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double amp = hermite_function(p.n, x[j] - c);
        out[j] = p.mu - p.g1d * amp * amp;
    }
}

}  // namespace gpe::exact
