// AVX2+FMA kernels, two complex values per 256-bit lane. This translation
// unit is built with -mavx2 -mfma; nothing here runs unless the dispatcher
// verified CPU support. Tails fall back to the scalar formulas.
//
// Reductions keep four partial accumulators and combine them at the end, so
// they match the scalar reference to rounding rather than bitwise.

#include "gpe/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#if defined(GPE_HAVE_MVEC)
// glibc vector math ABI, max 4-ulp error
extern "C" __m256d _ZGVdN4v_sin(__m256d);
extern "C" __m256d _ZGVdN4v_cos(__m256d);
#endif

namespace gpe::kernels {
namespace {

inline double hsum(__m256d v) {
    alignas(32) double p[4];
    _mm256_store_pd(p, v);
    return (p[0] + p[2]) + (p[1] + p[3]);
}

// complex multiply of packed pairs: a * b with a = [ar0 ai0 ar1 ai1]
inline __m256d cmul_pd(__m256d a, __m256d b) {
    const __m256d ar = _mm256_movedup_pd(a);          // [ar0 ar0 ar1 ar1]
    const __m256d ai = _mm256_permute_pd(a, 0xF);     // [ai0 ai0 ai1 ai1]
    const __m256d bs = _mm256_permute_pd(b, 0x5);     // [bi0 br0 bi1 br1]
    return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bs));
}

void abs2_avx2(const Complex* psi, double* rho, std::size_t n) {
    const double* p = reinterpret_cast<const double*>(psi);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(p + 2 * i);
        const __m256d b = _mm256_loadu_pd(p + 2 * i + 4);
        const __m256d sa = _mm256_mul_pd(a, a);
        const __m256d sb = _mm256_mul_pd(b, b);
        // [r0 r2 r1 r3] -> [r0 r1 r2 r3]
        const __m256d h = _mm256_hadd_pd(sa, sb);
        _mm256_storeu_pd(rho + i, _mm256_permute4x64_pd(h, 0xD8));
    }
    for (; i < n; ++i) {
        const double re = psi[i].real(), im = psi[i].imag();
        rho[i] = re * re + im * im;
    }
}

void cmul_avx2(Complex* psi, const Complex* f, std::size_t n) {
    double* p = reinterpret_cast<double*>(psi);
    const double* q = reinterpret_cast<const double*>(f);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d a = _mm256_loadu_pd(p + 2 * i);
        const __m256d b = _mm256_loadu_pd(q + 2 * i);
        _mm256_storeu_pd(p + 2 * i, cmul_pd(a, b));
    }
    for (; i < n; ++i) {
        const double ar = psi[i].real(), ai = psi[i].imag();
        const double br = f[i].real(), bi = f[i].imag();
        psi[i] = Complex(ar * br - ai * bi, ar * bi + ai * br);
    }
}

void phase_apply_avx2(Complex* psi, const double* theta, std::size_t n) {
#if defined(GPE_HAVE_MVEC)
    double* p = reinterpret_cast<double*>(psi);
    const __m256d neg = _mm256_set1_pd(-0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d th = _mm256_loadu_pd(theta + i);
        const __m256d c = _ZGVdN4v_cos(th);
        const __m256d ns = _mm256_xor_pd(_ZGVdN4v_sin(th), neg);
        // factors exp(-i theta) = [c0 -s0 c1 -s1] and [c2 -s2 c3 -s3]
        const __m256d f0 = _mm256_blend_pd(_mm256_permute4x64_pd(c, 0x50),
                                           _mm256_permute4x64_pd(ns, 0x50), 0xA);
        const __m256d f1 = _mm256_blend_pd(_mm256_permute4x64_pd(c, 0xFA),
                                           _mm256_permute4x64_pd(ns, 0xFA), 0xA);
        const __m256d a0 = _mm256_loadu_pd(p + 2 * i);
        const __m256d a1 = _mm256_loadu_pd(p + 2 * i + 4);
        _mm256_storeu_pd(p + 2 * i, cmul_pd(a0, f0));
        _mm256_storeu_pd(p + 2 * i + 4, cmul_pd(a1, f1));
    }
    for (; i < n; ++i) {
        const double c = std::cos(theta[i]);
        const double s = std::sin(theta[i]);
        const double ar = psi[i].real(), ai = psi[i].imag();
        psi[i] = Complex(ar * c + ai * s, ai * c - ar * s);
    }
#else
    detail::scalar_table.phase_apply(psi, theta, n);
#endif
}

void potential_theta_avx2(double* theta, const double* v, const double* rho,
                          double g, double dt, std::size_t n) {
    const __m256d gv = _mm256_set1_pd(g);
    const __m256d dtv = _mm256_set1_pd(dt);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d t =
            _mm256_fmadd_pd(gv, _mm256_loadu_pd(rho + i), _mm256_loadu_pd(v + i));
        _mm256_storeu_pd(theta + i, _mm256_mul_pd(t, dtv));
    }
    for (; i < n; ++i) theta[i] = (v[i] + g * rho[i]) * dt;
}

Moments density_moments_avx2(const Complex* psi, const double* x, std::size_t n) {
    const double* p = reinterpret_cast<const double*>(psi);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d a = _mm256_loadu_pd(p + 2 * i);
        const __m256d b = _mm256_loadu_pd(p + 2 * i + 4);
        const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
        const __m256d rho = _mm256_permute4x64_pd(h, 0xD8);
        const __m256d xv = _mm256_loadu_pd(x + i);
        acc0 = _mm256_add_pd(acc0, rho);
        const __m256d xr = _mm256_mul_pd(xv, rho);
        acc1 = _mm256_add_pd(acc1, xr);
        acc2 = _mm256_fmadd_pd(xv, xr, acc2);
    }
    Moments m{hsum(acc0), hsum(acc1), hsum(acc2)};
    for (; i < n; ++i) {
        const double re = psi[i].real(), im = psi[i].imag();
        const double rho = re * re + im * im;
        m.m0 += rho;
        m.m1 += x[i] * rho;
        m.m2 += x[i] * x[i] * rho;
    }
    return m;
}

Complex inner_avx2(const Complex* a, const Complex* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        const __m256d ar = _mm256_movedup_pd(va);
        const __m256d ai = _mm256_permute_pd(va, 0xF);
        const __m256d bs = _mm256_permute_pd(vb, 0x5);
        // conj(a)*b: even lanes ar*br + ai*bi, odd lanes ar*bi - ai*br
        acc = _mm256_add_pd(acc, _mm256_fmsubadd_pd(ar, vb, _mm256_mul_pd(ai, bs)));
    }
    alignas(32) double q[4];
    _mm256_store_pd(q, acc);
    double re = q[0] + q[2], im = q[1] + q[3];
    for (; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double scaled_sq_distance_avx2(const Complex* a, const Complex* b, Complex s,
                               std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    const __m256d sv = _mm256_setr_pd(s.real(), s.imag(), s.real(), s.imag());
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        const __m256d d = _mm256_sub_pd(va, cmul_pd(sv, vb));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double out = hsum(acc);
    const double sr = s.real(), si = s.imag();
    for (; i < n; ++i) {
        const double br = b[i].real(), bi = b[i].imag();
        const double dr = a[i].real() - (sr * br - si * bi);
        const double di = a[i].imag() - (sr * bi + si * br);
        out += dr * dr + di * di;
    }
    return out;
}

void scale_avx2(Complex* a, double s, std::size_t n) {
    double* p = reinterpret_cast<double*>(a);
    const __m256d sv = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        _mm256_storeu_pd(p + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(p + 2 * i), sv));
    for (; i < n; ++i) a[i] *= s;
}

const Table avx2_table = {
    abs2_avx2,
    cmul_avx2,
    phase_apply_avx2,
    potential_theta_avx2,
    density_moments_avx2,
    inner_avx2,
    scaled_sq_distance_avx2,
    scale_avx2,
    "avx2",
};

}  // namespace

namespace detail {
const Table* avx2_table_ptr = &avx2_table;
}  // namespace detail

}  // namespace gpe::kernels

#else  // non-x86 build: scalar only

namespace gpe::kernels::detail {
const Table* avx2_table_ptr = nullptr;
}  // namespace gpe::kernels::detail

#endif
