#pragma once
// Data-parallel inner loops of the solver and diagnostics.
//
// Every kernel exists in a scalar reference form and (on x86-64) an AVX2
// form. The backend is chosen once at startup from CPUID, can be overridden
// with the GPESOL_KERNELS environment variable ("scalar" or "avx2"), and the
// two implementations are equivalence-tested against each other. Reductions
// use a different summation order per backend, so results agree to rounding,
// not bitwise; a single run always uses one backend and stays deterministic.

#include <complex>
#include <cstddef>

namespace gpe::kernels {

using Complex = std::complex<double>;

enum class Backend { scalar, avx2 };

struct Moments {
    double m0 = 0.0;  // sum |psi|^2
    double m1 = 0.0;  // sum x |psi|^2
    double m2 = 0.0;  // sum x^2 |psi|^2
};

struct Table {
    // rho[i] = |psi[i]|^2
    void (*abs2)(const Complex* psi, double* rho, std::size_t n);
    // psi[i] *= f[i]
    void (*cmul)(Complex* psi, const Complex* f, std::size_t n);
    // psi[i] *= exp(-i theta[i])
    void (*phase_apply)(Complex* psi, const double* theta, std::size_t n);
    // theta[i] = (v[i] + g rho[i]) * dt
    void (*potential_theta)(double* theta, const double* v, const double* rho,
                            double g, double dt, std::size_t n);
    // raw sums of |psi|^2 weighted by 1, x, x^2 (caller applies dx)
    Moments (*density_moments)(const Complex* psi, const double* x, std::size_t n);
    // sum conj(a[i]) * b[i]
    Complex (*inner)(const Complex* a, const Complex* b, std::size_t n);
    // sum |a[i] - s*b[i]|^2
    double (*scaled_sq_distance)(const Complex* a, const Complex* b, Complex s,
                                 std::size_t n);
    // a[i] *= s
    void (*scale)(Complex* a, double s, std::size_t n);
    const char* name;
};

bool supported(Backend b);
const Table& table(Backend b);  // throws std::runtime_error if unsupported

Backend active();
void set_active(Backend b);  // throws if unsupported on this CPU
const Table& active_table();

namespace detail {
extern const Table scalar_table;
extern const Table* avx2_table_ptr;  // null when not built for x86-64
}  // namespace detail

}  // namespace gpe::kernels
