#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "gpe/constants.hpp"
#include "gpe/units.hpp"

using namespace gpe;
using units::PhysicalParams;

namespace {
// 7Li trap of the worked example: N=1e4, a_s=+-1.5 nm, omega_x=20, omega_r=800
PhysicalParams li7(double a_s) {
    return {1e4, a_s, 20.0, 800.0, 7.0 * constants::proton_mass};
}
}  // namespace

TEST_CASE("oscillator lengths reproduce the 7Li example") {
    const auto l = units::oscillator_lengths(li7(1.5e-9));
    CHECK(l.axial == doctest::Approx(21.22e-6).epsilon(0.005));
    CHECK(l.axial / l.radial == doctest::Approx(std::sqrt(40.0)).epsilon(1e-12));
}

TEST_CASE("equal frequencies give equal lengths") {
    const PhysicalParams p{100, 0.0, 50.0, 50.0, constants::proton_mass};
    const auto l = units::oscillator_lengths(p);
    CHECK(l.axial == l.radial);
}

TEST_CASE("oscillator length from direct formula evaluation") {
    const PhysicalParams p{1, 0.0, 1.0, 2.0, constants::proton_mass};
    const auto l = units::oscillator_lengths(p);
    const double expected = std::sqrt(1.054571817e-34 / 1.67262192369e-27);
    CHECK(l.axial == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("interaction strength hits +-56.55") {
    CHECK(units::interaction_strength(li7(+1.5e-9)) == doctest::Approx(56.55).epsilon(0.005));
    CHECK(units::interaction_strength(li7(-1.5e-9)) == doctest::Approx(-56.55).epsilon(0.005));
    CHECK(units::interaction_strength(li7(0.0)) == 0.0);
}

TEST_CASE("interaction strength is exactly linear in N and a_s") {
    auto p = li7(1.5e-9);
    const double base = units::interaction_strength(p);
    // scaling by powers of two only touches exponents: bit-exact
    p.atom_count *= 2.0;
    CHECK(units::interaction_strength(p) == 2.0 * base);
    p.atom_count /= 2.0;
    p.scattering_length *= -2.0;
    CHECK(units::interaction_strength(p) == -2.0 * base);
    // generic factors agree to rounding
    p.scattering_length = 1.5e-9 * 3.0;
    CHECK(units::interaction_strength(p) == doctest::Approx(3.0 * base).epsilon(1e-15));
}

TEST_CASE("quasienergy") {
    CHECK(units::quasienergy(0, 10.0) == 10.5);
    CHECK(units::quasienergy(0, 0.0) == 0.5);
    CHECK(units::quasienergy(3, -0.5) == 3.0);
    CHECK_THROWS_AS(units::quasienergy(-1, 0.0), std::domain_error);
}

TEST_CASE("quasienergy ladder spacing is one") {
    for (const double mu : {0.0, 10.0, -0.5, 0.3, 123.456}) {
        for (int n = 0; n < 40; ++n) {
            const double gap = units::quasienergy(n + 1, mu) - units::quasienergy(n, mu);
            CHECK(gap == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
}

TEST_CASE("physical parameter validation") {
    CHECK_THROWS_AS(units::oscillator_lengths({1e4, 1e-9, -20.0, 800.0, 1e-26}),
                    std::domain_error);
    CHECK_THROWS_AS(units::oscillator_lengths({1e4, 1e-9, 20.0, 800.0, 0.0}),
                    std::domain_error);
    CHECK_THROWS_AS(units::oscillator_lengths({0.0, 1e-9, 20.0, 800.0, 1e-26}),
                    std::domain_error);
    CHECK_FALSE(li7(1.5e-9).quasi1d_questionable());
    const PhysicalParams tight{1e4, 1.5e-9, 100.0, 800.0, 1e-26};
    CHECK(tight.quasi1d_questionable());
}

TEST_CASE("sim parameter validation") {
    SimParams p;  // defaults are valid
    CHECK_NOTHROW(p.validate());
    p.grid_points = 1000;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p.grid_points = 8;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = SimParams{};
    p.x0 = 15.0;  // needs L > 21
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = SimParams{};
    p.dt = 0.0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = SimParams{};
    p.mode_index = -2;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
}
