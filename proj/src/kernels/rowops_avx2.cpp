// Compiled with -mavx2.
#include "ghk/kernels/rowops.hpp"

#include <cassert>

#include <immintrin.h>

namespace ghk::kernels {

namespace {

// Barrett reduction of eight unsigned 32-bit lanes: returns t mod p for
// t < 2^32, with mu = floor(2^32 / p).
inline __m256i reduce_lanes(__m256i t, __m256i mu, __m256i pv)
{
    const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(t, mu), 32);
    const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(t, 32), mu);
    const __m256i q = _mm256_blend_epi32(even, odd, 0b10101010);
    __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, pv));
    // r < 2p: one conditional subtraction; unsigned min picks r - p unless it wrapped.
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, pv));
}

}  // namespace

void axpy_mod_avx2(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                   std::uint32_t factor, std::uint32_t p)
{
    assert(dst.size() == src.size());
    assert(p < kSimdModulusLimit);
    const std::size_t n = dst.size();
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i mu = _mm256_set1_epi32(static_cast<int>((std::uint64_t{1} << 32) / p));
    const __m256i fv = _mm256_set1_epi32(static_cast<int>(factor));

    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + k));
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + k));
        const __m256i prod = reduce_lanes(_mm256_mullo_epi32(s, fv), mu, pv);
        __m256i sum = _mm256_add_epi32(d, prod);
        sum = _mm256_min_epu32(sum, _mm256_sub_epi32(sum, pv));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + k), sum);
    }
    if (k < n)
        axpy_mod_scalar(dst.subspan(k), src.subspan(k), factor, p);
}

void scale_mod_avx2(std::span<std::uint32_t> row, std::uint32_t factor, std::uint32_t p)
{
    assert(p < kSimdModulusLimit);
    const std::size_t n = row.size();
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i mu = _mm256_set1_epi32(static_cast<int>((std::uint64_t{1} << 32) / p));
    const __m256i fv = _mm256_set1_epi32(static_cast<int>(factor));

    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + k));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(row.data() + k),
                            reduce_lanes(_mm256_mullo_epi32(x, fv), mu, pv));
    }
    if (k < n)
        scale_mod_scalar(row.subspan(k), factor, p);
}

}  // namespace ghk::kernels
