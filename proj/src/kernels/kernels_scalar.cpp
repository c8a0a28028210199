#include <cstring>

#include "kernels_internal.hpp"

namespace qfib::kernels::detail {

void or_bytes_scalar(std::uint8_t* dst, const std::uint8_t* src,
                     std::size_t n) {
    std::size_t i = 0;
    // word-at-a-time with unaligned loads; tail in bytes
    for (; i + 8 <= n; i += 8) {
        std::uint64_t a, b;
        std::memcpy(&a, dst + i, 8);
        std::memcpy(&b, src + i, 8);
        a |= b;
        std::memcpy(dst + i, &a, 8);
    }
    for (; i < n; ++i)
        dst[i] |= src[i];
}

bool any_and_scalar(const std::uint8_t* a, const std::uint8_t* b,
                    std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        std::uint64_t x, y;
        std::memcpy(&x, a + i, 8);
        std::memcpy(&y, b + i, 8);
        if (x & y)
            return true;
    }
    for (; i < n; ++i)
        if (a[i] & b[i])
            return true;
    return false;
}

void square_mod_values_scalar(std::uint32_t a, std::uint32_t m,
                              std::uint32_t x0, std::uint32_t* out,
                              std::size_t n) {
    // strength-reduced: v(x+1) = v(x) + a(2x+1), all residues kept < m
    std::uint64_t x = x0 % m;
    std::uint32_t v = static_cast<std::uint32_t>(x * x % m);
    std::uint32_t d = static_cast<std::uint32_t>(
        (2 * x + 1) % m); // (2x+1) mod m, scaled by a below
    // keep value and delta both reduced: v(x+1)-v(x) = a*(2x+1) mod m
    std::uint32_t av = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a) * v % m);
    std::uint32_t ad = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a) * d % m);
    std::uint32_t two_a = static_cast<std::uint32_t>(
        (2 * static_cast<std::uint64_t>(a)) % m);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = av;
        av += ad;
        if (av >= m)
            av -= m;
        ad += two_a;
        if (ad >= m)
            ad -= m;
    }
}

} // namespace qfib::kernels::detail
