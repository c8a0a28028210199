#include "qfib/kernels.hpp"

#include <atomic>

#include "kernels_internal.hpp"

namespace qfib::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(QFIB_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa detect() { return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar; }

std::atomic<Isa> g_isa{detect()};

} // namespace

Isa active_isa() { return g_isa.load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    if (isa == Isa::Avx2 && !cpu_has_avx2())
        isa = Isa::Scalar;
    g_isa.store(isa, std::memory_order_relaxed);
}

void reset_isa() { g_isa.store(detect(), std::memory_order_relaxed); }

void or_bytes(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
#if defined(QFIB_HAVE_AVX2_TU)
    if (active_isa() == Isa::Avx2) {
        detail::or_bytes_avx2(dst, src, n);
        return;
    }
#endif
    detail::or_bytes_scalar(dst, src, n);
}

void or_rotated(std::uint8_t* dst, const std::uint8_t* src, std::size_t n,
                std::size_t shift) {
    shift %= n;
    or_bytes(dst, src + shift, n - shift);
    or_bytes(dst + (n - shift), src, shift);
}

bool any_and(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
#if defined(QFIB_HAVE_AVX2_TU)
    if (active_isa() == Isa::Avx2)
        return detail::any_and_avx2(a, b, n);
#endif
    return detail::any_and_scalar(a, b, n);
}

void square_mod_values(std::uint32_t a, std::uint32_t m, std::uint32_t x0,
                       std::uint32_t* out, std::size_t n) {
#if defined(QFIB_HAVE_AVX2_TU)
    if (active_isa() == Isa::Avx2) {
        detail::square_mod_values_avx2(a, m, x0, out, n);
        return;
    }
#endif
    detail::square_mod_values_scalar(a, m, x0, out, n);
}

} // namespace qfib::kernels
