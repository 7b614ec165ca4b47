#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ghk::oracle {

bool is_prime(std::uint64_t n);

/// a^{-1} mod p for prime p and a not divisible by p.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

/// Dense row-major matrix with entries in [0, p).
class ModMatrix {
public:
    ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    ModMatrix transposed() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

/// Rank over F_p by Gaussian elimination (destroys a copy of the input).
/// p must be prime and below 2^32.
std::size_t rank_mod_p(ModMatrix m, std::uint32_t p);

}  // namespace ghk::oracle
