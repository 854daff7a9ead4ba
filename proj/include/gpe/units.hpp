#pragma once
// Conversion between laboratory parameters and the dimensionless problem.
//
// Trap units: time in 1/omega_x, length in l_x = sqrt(hbar/(m omega_x)),
// energies in hbar*omega_x. Frequencies are angular (rad/s); the CLI offers a
// frequencies_in_hz switch that multiplies by 2*pi before conversion.

#include <cstddef>

namespace gpe::units {

struct PhysicalParams {
    double atom_count = 0.0;         // N
    double scattering_length = 0.0;  // a_s, metres, signed
    double axial_freq = 0.0;         // omega_x, rad/s
    double radial_freq = 0.0;        // omega_r, rad/s
    double atomic_mass = 0.0;        // kg

    void validate() const;  // throws std::domain_error
    // Quasi-1D reduction assumes omega_r >> omega_x; flag rather than reject.
    bool quasi1d_questionable() const { return radial_freq < 10.0 * axial_freq; }
};

struct OscillatorLengths {
    double axial = 0.0;   // l_x, metres
    double radial = 0.0;  // l_r, metres
};

OscillatorLengths oscillator_lengths(const PhysicalParams& p);

// g1d = 2 N omega_r a_s / (omega_x l_x), dimensionless, sign of a_s
double interaction_strength(const PhysicalParams& p);

// E_n = 1/2 + mu + n, in units of hbar*omega_x
double quasienergy(int n, double mu);

}  // namespace gpe::units

namespace gpe {

// Dimensionless problem definition consumed by every downstream module.
struct SimParams {
    double g1d = 0.0;
    double mu = 0.0;
    double x0 = 0.0;
    int mode_index = 0;             // n
    double grid_halfwidth = 20.0;   // L, in l_x
    std::size_t grid_points = 2048; // M, power of two
    double dt = 1e-3;               // in 1/omega_x

    void validate() const;  // throws std::domain_error
};

}  // namespace gpe
