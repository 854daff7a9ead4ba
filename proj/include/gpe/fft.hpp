#pragma once
// Thin FFTW wrapper. Plans are created with FFTW_ESTIMATE on buffers owned by
// this object, so transform results do not depend on caller alignment or on
// plan timing — a requirement for byte-reproducible runs. Planning is guarded
// by a global mutex (FFTW planning is not thread-safe); execution on distinct
// Fft instances is.

#include <complex>
#include <cstddef>
#include <span>

namespace gpe {

class Fft {
public:
    explicit Fft(std::size_t n);
    ~Fft();
    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    std::size_t size() const { return n_; }

    void forward(std::span<const std::complex<double>> in,
                 std::span<std::complex<double>> out);
    // Includes the 1/n normalization.
    void inverse(std::span<const std::complex<double>> in,
                 std::span<std::complex<double>> out);

private:
    std::size_t n_;
    void* buf_;   // fftw_complex*
    void* fwd_;   // fftw_plan
    void* inv_;   // fftw_plan
};

}  // namespace gpe
