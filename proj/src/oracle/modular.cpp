#include "ghk/oracle/modular.hpp"

#include <algorithm>
#include <utility>

#include "ghk/kernels/rowops.hpp"
#include "ghk/numeric.hpp"

namespace ghk::oracle {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p)
{
    // Fermat: a^{p-2}.
    std::uint64_t base = a % p;
    std::uint64_t result = 1;
    for (std::uint64_t exp = p - 2; exp > 0; exp >>= 1) {
        if (exp & 1)
            result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

ModMatrix ModMatrix::transposed() const
{
    ModMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

std::size_t rank_mod_p(ModMatrix m, std::uint32_t p)
{
    if (!is_prime(p))
        throw PreconditionError("rank_mod_p: modulus " + std::to_string(p) + " is not prime");

    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, c) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != rank) {
            auto a = m.row(pivot);
            auto b = m.row(rank);
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(c), a.end(),
                             b.begin() + static_cast<std::ptrdiff_t>(c));
        }
        auto pivot_row = m.row(rank).subspan(c);
        kernels::scale_mod(pivot_row, mod_inverse(pivot_row[0], p), p);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            const std::uint32_t v = m.at(r, c);
            if (v == 0)
                continue;
            kernels::axpy_mod(m.row(r).subspan(c), pivot_row, p - v, p);
        }
        ++rank;
    }
    return rank;
}

}  // namespace ghk::oracle
