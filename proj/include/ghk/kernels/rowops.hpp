#pragma once

// Row kernels for Gaussian elimination over a prime field F_p.
//
// Each kernel has a scalar reference implementation and, where the build
// target allows it, an AVX2 variant. The active variant is selected once at
// startup from the CPU features (override with GHK_SIMD=scalar) and can be
// switched explicitly for equivalence testing.

#include <cstdint>
#include <span>
#include <string_view>

namespace ghk::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Whether the variant was compiled in and the CPU supports it.
bool isa_available(Isa isa);

Isa active_isa();

/// Selects a variant; falls back to scalar when it is unavailable.
void set_active_isa(Isa isa);

// dst[k] = (dst[k] + factor * src[k]) mod p. Entries and factor lie in [0, p).
void axpy_mod_scalar(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                     std::uint32_t factor, std::uint32_t p);
// row[k] = (row[k] * factor) mod p.
void scale_mod_scalar(std::span<std::uint32_t> row, std::uint32_t factor, std::uint32_t p);

#if defined(GHK_HAVE_AVX2_KERNELS)
// Require p < 2^16 (so a product of two residues fits in 32 bits).
void axpy_mod_avx2(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                   std::uint32_t factor, std::uint32_t p);
void scale_mod_avx2(std::span<std::uint32_t> row, std::uint32_t factor, std::uint32_t p);
#endif

/// Largest modulus the AVX2 variants accept.
inline constexpr std::uint32_t kSimdModulusLimit = 1u << 16;

// Dispatched entry points: use the active variant when it supports p.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> row, std::uint32_t factor, std::uint32_t p);

}  // namespace ghk::kernels
