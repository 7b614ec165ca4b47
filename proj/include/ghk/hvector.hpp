#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "ghk/numeric.hpp"

namespace ghk {

/// A finite sequence (h_0, h_1, ..., h_e) of non-negative integers indexed by degree.
struct HVector {
    std::vector<BigInt> entries;

    HVector() = default;
    explicit HVector(std::vector<BigInt> values) : entries(std::move(values)) {}
    HVector(std::initializer_list<long long> values)
    {
        entries.reserve(values.size());
        for (long long v : values)
            entries.emplace_back(v);
    }

    std::int64_t socle_degree() const { return static_cast<std::int64_t>(entries.size()) - 1; }
    std::size_t size() const { return entries.size(); }
    const BigInt& operator[](std::size_t d) const { return entries[d]; }
    BigInt& operator[](std::size_t d) { return entries[d]; }

    bool symmetric() const
    {
        for (std::size_t d = 0, n = entries.size(); d < n / 2; ++d)
            if (entries[d] != entries[n - 1 - d])
                return false;
        return true;
    }

    friend bool operator==(const HVector&, const HVector&) = default;
};

}  // namespace ghk
