#pragma once

namespace gpe::constants {

// CODATA 2018
inline constexpr double hbar = 1.054571817e-34;          // J s
inline constexpr double proton_mass = 1.67262192369e-27;  // kg

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;

}  // namespace gpe::constants
