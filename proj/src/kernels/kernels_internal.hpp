#pragma once

#include <cstddef>
#include <cstdint>

namespace qfib::kernels::detail {

void or_bytes_scalar(std::uint8_t* dst, const std::uint8_t* src,
                     std::size_t n);
bool any_and_scalar(const std::uint8_t* a, const std::uint8_t* b,
                    std::size_t n);
void square_mod_values_scalar(std::uint32_t a, std::uint32_t m,
                              std::uint32_t x0, std::uint32_t* out,
                              std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
#define QFIB_HAVE_AVX2_TU 1
void or_bytes_avx2(std::uint8_t* dst, const std::uint8_t* src, std::size_t n);
bool any_and_avx2(const std::uint8_t* a, const std::uint8_t* b,
                  std::size_t n);
void square_mod_values_avx2(std::uint32_t a, std::uint32_t m,
                            std::uint32_t x0, std::uint32_t* out,
                            std::size_t n);
#endif

} // namespace qfib::kernels::detail
