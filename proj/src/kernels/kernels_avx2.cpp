#include "kernels_internal.hpp"

#if defined(QFIB_HAVE_AVX2_TU)

#include <immintrin.h>

// This translation unit is compiled with -mavx2; nothing here may be called
// unless the dispatcher has confirmed AVX2 support at runtime.

namespace qfib::kernels::detail {

void or_bytes_avx2(std::uint8_t* dst, const std::uint8_t* src,
                   std::size_t n) {
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i a = _mm256_loadu_si256(
            reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(
            reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_or_si256(a, b));
    }
    or_bytes_scalar(dst + i, src + i, n - i);
}

bool any_and_avx2(const std::uint8_t* a, const std::uint8_t* b,
                  std::size_t n) {
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i x = _mm256_loadu_si256(
            reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(
            reinterpret_cast<const __m256i*>(b + i));
        if (!_mm256_testz_si256(x, y))
            return true;
    }
    return any_and_scalar(a + i, b + i, n - i);
}

void square_mod_values_avx2(std::uint32_t a, std::uint32_t m,
                            std::uint32_t x0, std::uint32_t* out,
                            std::size_t n) {
    if (n < 16) {
        square_mod_values_scalar(a, m, x0, out, n);
        return;
    }
    // 8 lanes, lane j tracks x = x0 + j, stepping by 8:
    //   v(x+8) = v(x) + a(16x + 64),  d(x+8) = d(x) + 128a   (mod m)
    alignas(32) std::uint32_t v0[8], d0[8];
    for (int j = 0; j < 8; ++j) {
        std::uint64_t x = (x0 + j) % m;
        v0[j] = static_cast<std::uint32_t>(
            a * (x * x % m) % m);
        d0[j] = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(a) * ((16 * x + 64) % m) % m);
    }
    __m256i v = _mm256_load_si256(reinterpret_cast<const __m256i*>(v0));
    __m256i d = _mm256_load_si256(reinterpret_cast<const __m256i*>(d0));
    const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
    const __m256i step = _mm256_set1_epi32(static_cast<int>(
        (128ull * a) % m));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), v);
        // v = (v + d) mod m, via min(v+d, v+d-m) on unsigned lanes
        __m256i s = _mm256_add_epi32(v, d);
        v = _mm256_min_epu32(s, _mm256_sub_epi32(s, vm));
        __m256i t = _mm256_add_epi32(d, step);
        d = _mm256_min_epu32(t, _mm256_sub_epi32(t, vm));
    }
    if (i < n)
        square_mod_values_scalar(a, m, x0 + static_cast<std::uint32_t>(i),
                                 out + i, n - i);
}

} // namespace qfib::kernels::detail

#endif // QFIB_HAVE_AVX2_TU
