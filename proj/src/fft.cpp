#include "gpe/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <stdexcept>

namespace gpe {
namespace {
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Fft::Fft(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("Fft: empty transform");
    buf_ = fftw_alloc_complex(n);
    if (!buf_) throw std::bad_alloc();
    auto* buf = static_cast<fftw_complex*>(buf_);
    std::lock_guard<std::mutex> lock(plan_mutex());
    // FFTW_ESTIMATE keeps plan selection independent of runtime timing.
    fwd_ = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    inv_ = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    if (!fwd_ || !inv_) throw std::runtime_error("Fft: planning failed");
}

Fft::~Fft() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(inv_));
    fftw_free(buf_);
}

void Fft::forward(std::span<const std::complex<double>> in,
                  std::span<std::complex<double>> out) {
    if (in.size() != n_ || out.size() != n_) throw std::invalid_argument("Fft: size mismatch");
    auto* buf = static_cast<fftw_complex*>(buf_);
    std::memcpy(buf, static_cast<const void*>(in.data()), n_ * sizeof(fftw_complex));
    fftw_execute(static_cast<fftw_plan>(fwd_));
    std::memcpy(static_cast<void*>(out.data()), buf, n_ * sizeof(fftw_complex));
}

void Fft::inverse(std::span<const std::complex<double>> in,
                  std::span<std::complex<double>> out) {
    if (in.size() != n_ || out.size() != n_) throw std::invalid_argument("Fft: size mismatch");
    auto* buf = static_cast<fftw_complex*>(buf_);
    std::memcpy(buf, static_cast<const void*>(in.data()), n_ * sizeof(fftw_complex));
    fftw_execute(static_cast<fftw_plan>(inv_));
    const double scale = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i)
        out[i] = std::complex<double>(buf[i][0] * scale, buf[i][1] * scale);
}

}  // namespace gpe
