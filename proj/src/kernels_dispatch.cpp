#include <cstdlib>
#include <stdexcept>
#include <string>

#include "gpe/kernels.hpp"

namespace gpe::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend resolve_initial() {
    if (const char* env = std::getenv("GPESOL_KERNELS")) {
        const std::string want(env);
        if (want == "scalar") return Backend::scalar;
        if (want == "avx2") {
            if (supported(Backend::avx2)) return Backend::avx2;
            throw std::runtime_error("GPESOL_KERNELS=avx2 but CPU lacks AVX2/FMA");
        }
        if (want != "auto" && !want.empty())
            throw std::runtime_error("unknown GPESOL_KERNELS value: " + want);
    }
    return supported(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

Backend& active_ref() {
    static Backend b = resolve_initial();
    return b;
}

}  // namespace

bool supported(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2: return detail::avx2_table_ptr != nullptr && cpu_has_avx2();
    }
    return false;
}

const Table& table(Backend b) {
    if (!supported(b)) throw std::runtime_error("kernel backend not supported on this CPU");
    return b == Backend::scalar ? detail::scalar_table : *detail::avx2_table_ptr;
}

Backend active() { return active_ref(); }

void set_active(Backend b) {
    if (!supported(b)) throw std::runtime_error("kernel backend not supported on this CPU");
    active_ref() = b;
}

const Table& active_table() { return table(active()); }

}  // namespace gpe::kernels
