#pragma once

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops of the exhaustive p-adic search, with scalar
// reference implementations and AVX2 variants selected at runtime. The
// scalar versions are the semantic reference; the SIMD paths must be
// bit-identical (see tests/test_kernels.cpp).

namespace qfib::kernels {

enum class Isa { Scalar, Avx2 };

/// Instruction set the dispatcher currently resolves to.
Isa active_isa();

/// Test hook: pin the dispatcher to one implementation. Isa::Avx2 is ignored
/// on machines without AVX2. Call reset_isa() to return to auto-detection.
void force_isa(Isa isa);
void reset_isa();

/// dst[i] |= src[i] over n bytes.
void or_bytes(std::uint8_t* dst, const std::uint8_t* src, std::size_t n);

/// dst[i] |= src[(i + shift) mod n] over an n-byte circular buffer.
void or_rotated(std::uint8_t* dst, const std::uint8_t* src, std::size_t n,
                std::size_t shift);

/// True iff a[i] & b[i] != 0 for some i < n.
bool any_and(const std::uint8_t* a, const std::uint8_t* b, std::size_t n);

/// out[i] = a * (x0 + i)^2 mod m for i < n; requires 0 <= a < m < 2^31.
void square_mod_values(std::uint32_t a, std::uint32_t m, std::uint32_t x0,
                       std::uint32_t* out, std::size_t n);

} // namespace qfib::kernels
