// Scalar reference kernels. These define the semantics the AVX2 variants are
// tested against.

#include <cmath>

#include "gpe/kernels.hpp"

namespace gpe::kernels {
namespace {

void abs2_scalar(const Complex* psi, double* rho, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double re = psi[i].real(), im = psi[i].imag();
        rho[i] = re * re + im * im;
    }
}

void cmul_scalar(Complex* psi, const Complex* f, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = psi[i].real(), ai = psi[i].imag();
        const double br = f[i].real(), bi = f[i].imag();
        psi[i] = Complex(ar * br - ai * bi, ar * bi + ai * br);
    }
}

void phase_apply_scalar(Complex* psi, const double* theta, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double c = std::cos(theta[i]);
        const double s = std::sin(theta[i]);
        const double ar = psi[i].real(), ai = psi[i].imag();
        // multiply by exp(-i theta) = c - i s
        psi[i] = Complex(ar * c + ai * s, ai * c - ar * s);
    }
}

void potential_theta_scalar(double* theta, const double* v, const double* rho,
                            double g, double dt, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) theta[i] = (v[i] + g * rho[i]) * dt;
}

Moments density_moments_scalar(const Complex* psi, const double* x, std::size_t n) {
    Moments m;
    for (std::size_t i = 0; i < n; ++i) {
        const double re = psi[i].real(), im = psi[i].imag();
        const double rho = re * re + im * im;
        m.m0 += rho;
        m.m1 += x[i] * rho;
        m.m2 += x[i] * x[i] * rho;
    }
    return m;
}

Complex inner_scalar(const Complex* a, const Complex* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double scaled_sq_distance_scalar(const Complex* a, const Complex* b, Complex s,
                                 std::size_t n) {
    const double sr = s.real(), si = s.imag();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double br = b[i].real(), bi = b[i].imag();
        const double dr = a[i].real() - (sr * br - si * bi);
        const double di = a[i].imag() - (sr * bi + si * br);
        acc += dr * dr + di * di;
    }
    return acc;
}

void scale_scalar(Complex* a, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) a[i] *= s;
}

}  // namespace

namespace detail {
const Table scalar_table = {
    abs2_scalar,
    cmul_scalar,
    phase_apply_scalar,
    potential_theta_scalar,
    density_moments_scalar,
    inner_scalar,
    scaled_sq_distance_scalar,
    scale_scalar,
    "scalar",
};
}  // namespace detail

}  // namespace gpe::kernels
