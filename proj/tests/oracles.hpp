#pragma once

// Test-only reference computations, kept independent of the library's
// multiplicative binomial and greedy expansion code.

#include <cstdint>
#include <map>
#include <vector>

#include "ghk/numeric.hpp"

namespace ghk::reference {

/// C(n, q) from Pascal's triangle, with C(n, q) = 0 for n < q or q < 0.
inline BigInt pascal(std::int64_t n, std::int64_t q)
{
    static std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
    if (q < 0 || n < q)
        return 0;
    while (static_cast<std::int64_t>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<BigInt> next(prev.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t k = 1; k + 1 < next.size(); ++k)
            next[k] = prev[k - 1] + prev[k];
        rows.push_back(std::move(next));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(q)];
}

/// Every term list (tops strictly decreasing, bottoms i, i-1, ..., j >= 1,
/// top >= bottom) with value <= limit, grouped by value.
inline std::map<std::int64_t, std::vector<std::vector<std::int64_t>>>
enumerate_representations(std::int64_t i, std::int64_t limit)
{
    std::map<std::int64_t, std::vector<std::vector<std::int64_t>>> out;
    std::vector<std::int64_t> tops;
    auto rec = [&](auto&& self, std::int64_t bottom, std::int64_t max_top, std::int64_t value) -> void {
        if (!tops.empty())
            out[value].push_back(tops);
        if (bottom < 1)
            return;
        for (std::int64_t t = bottom; t <= max_top; ++t) {
            const BigInt c = pascal(t, bottom);
            if (c + value > limit)
                break;
            tops.push_back(t);
            self(self, bottom - 1, t - 1, value + c.convert_to<std::int64_t>());
            tops.pop_back();
        }
    };
    rec(rec, i, limit + i, 0);
    return out;
}

}  // namespace ghk::reference
