#include <atomic>
#include <cstdlib>
#include <string>

#include "ghk/kernels/rowops.hpp"

namespace ghk::kernels {

namespace {

bool cpu_has_avx2()
{
#if defined(GHK_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa detect()
{
    if (const char* forced = std::getenv("GHK_SIMD"); forced && std::string(forced) == "scalar")
        return Isa::scalar;
    return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& active()
{
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa)
{
    return isa == Isa::scalar || (isa == Isa::avx2 && cpu_has_avx2());
}

Isa active_isa()
{
    return active().load(std::memory_order_relaxed);
}

void set_active_isa(Isa isa)
{
    active().store(isa_available(isa) ? isa : Isa::scalar, std::memory_order_relaxed);
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p)
{
#if defined(GHK_HAVE_AVX2_KERNELS)
    if (active_isa() == Isa::avx2 && p < kSimdModulusLimit)
        return axpy_mod_avx2(dst, src, factor, p);
#endif
    axpy_mod_scalar(dst, src, factor, p);
}

void scale_mod(std::span<std::uint32_t> row, std::uint32_t factor, std::uint32_t p)
{
#if defined(GHK_HAVE_AVX2_KERNELS)
    if (active_isa() == Isa::avx2 && p < kSimdModulusLimit)
        return scale_mod_avx2(row, factor, p);
#endif
    scale_mod_scalar(row, factor, p);
}

}  // namespace ghk::kernels
