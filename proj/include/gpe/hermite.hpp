#pragma once
// Normalized Hermite functions h_k(x) = H_k(x) exp(-x^2/2) / sqrt(sqrt(pi) 2^k k!).
// The normalization is folded into the three-term recurrence
//   h_{k+1} = x sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1},
// which keeps values bounded for any order instead of overflowing 2^k k!.

#include <span>
#include <vector>

namespace gpe::exact {

double hermite_function(int k, double x);  // throws std::domain_error for k < 0

// Fills out[0..] with h_0(x) .. h_{out.size()-1}(x) in one recurrence pass.
void hermite_functions(double x, std::span<double> out);

struct HermiteBasis {
    int max_order = 0;
    std::vector<double> eval(double x) const;  // h_0..h_max_order
};

}  // namespace gpe::exact
