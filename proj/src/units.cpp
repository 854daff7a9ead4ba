#include "gpe/units.hpp"

#include <cmath>
#include <stdexcept>

#include "gpe/constants.hpp"

namespace gpe::units {

void PhysicalParams::validate() const {
    if (!(atom_count >= 1.0)) throw std::domain_error("PhysicalParams: atom_count must be >= 1");
    if (!(axial_freq > 0.0)) throw std::domain_error("PhysicalParams: axial_freq must be > 0");
    if (!(radial_freq > 0.0)) throw std::domain_error("PhysicalParams: radial_freq must be > 0");
    if (!(atomic_mass > 0.0)) throw std::domain_error("PhysicalParams: atomic_mass must be > 0");
    if (!std::isfinite(scattering_length))
        throw std::domain_error("PhysicalParams: scattering_length must be finite");
}

OscillatorLengths oscillator_lengths(const PhysicalParams& p) {
    p.validate();
    return {std::sqrt(constants::hbar / (p.atomic_mass * p.axial_freq)),
            std::sqrt(constants::hbar / (p.atomic_mass * p.radial_freq))};
}

double interaction_strength(const PhysicalParams& p) {
    const auto l = oscillator_lengths(p);
    return 2.0 * p.atom_count * p.radial_freq * p.scattering_length /
           (p.axial_freq * l.axial);
}

double quasienergy(int n, double mu) {
    if (n < 0) throw std::domain_error("quasienergy: mode index must be >= 0");
    return 0.5 + mu + n;
}

}  // namespace gpe::units

namespace gpe {

void SimParams::validate() const {
    if (grid_points < 16 || (grid_points & (grid_points - 1)) != 0)
        throw std::domain_error("SimParams: grid_points must be a power of two >= 16");
    if (!(grid_halfwidth > x0 + 6.0))
        throw std::domain_error("SimParams: grid_halfwidth must exceed x0 + 6");
    if (!(dt > 0.0)) throw std::domain_error("SimParams: dt must be > 0");
    if (mode_index < 0) throw std::domain_error("SimParams: mode_index must be >= 0");
    if (!std::isfinite(g1d) || !std::isfinite(mu) || !std::isfinite(x0))
        throw std::domain_error("SimParams: parameters must be finite");
}

}  // namespace gpe
