#include "ghk/kernels/rowops.hpp"

#include <cassert>

namespace ghk::kernels {

void axpy_mod_scalar(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                     std::uint32_t factor, std::uint32_t p)
{
    assert(dst.size() == src.size());
    const std::uint64_t f = factor;
    for (std::size_t k = 0; k < dst.size(); ++k)
        dst[k] = static_cast<std::uint32_t>((dst[k] + f * src[k]) % p);
}

void scale_mod_scalar(std::span<std::uint32_t> row, std::uint32_t factor, std::uint32_t p)
{
    const std::uint64_t f = factor;
    for (std::uint32_t& x : row)
        x = static_cast<std::uint32_t>((f * x) % p);
}

}  // namespace ghk::kernels
