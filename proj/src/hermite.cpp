#include "gpe/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace gpe::exact {
namespace {
const double inv_pi_quarter = std::pow(std::acos(-1.0), -0.25);
}

double hermite_function(int k, double x) {
    if (k < 0) throw std::domain_error("hermite_function: order must be >= 0");
    const double h0 = inv_pi_quarter * std::exp(-0.5 * x * x);
    if (k == 0) return h0;
    double prev = h0;
    double cur = std::sqrt(2.0) * x * h0;
    for (int j = 1; j < k; ++j) {
        const double next =
            x * std::sqrt(2.0 / (j + 1)) * cur - std::sqrt(double(j) / (j + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

void hermite_functions(double x, std::span<double> out) {
    if (out.empty()) return;
    out[0] = inv_pi_quarter * std::exp(-0.5 * x * x);
    if (out.size() == 1) return;
    out[1] = std::sqrt(2.0) * x * out[0];
    for (std::size_t j = 1; j + 1 < out.size(); ++j)
        out[j + 1] = x * std::sqrt(2.0 / (j + 1)) * out[j] -
                     std::sqrt(double(j) / (j + 1)) * out[j - 1];
}

std::vector<double> HermiteBasis::eval(double x) const {
    if (max_order < 0) throw std::domain_error("HermiteBasis: max_order must be >= 0");
    std::vector<double> out(static_cast<std::size_t>(max_order) + 1);
    hermite_functions(x, out);
    return out;
}

}  // namespace gpe::exact
