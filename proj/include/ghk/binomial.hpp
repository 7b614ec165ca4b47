#pragma once

// Macaulay binomial expansions and the shifted-expansion operator.
//
// Every non-negative n has a unique i-binomial expansion
//     n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j),
// with n_i > n_{i-1} > ... > n_j >= j >= 1. The shifted evaluation
//     shift(n_(i), a, b) = sum_k C(n_k + b, k + a)
// is the building block of Macaulay's growth bound, Green's restriction
// bound, and the Gorenstein step bound in bounds.hpp.
//
// Binomials follow the zero convention C(m, q) = 0 whenever m < q or q < 0.

#include <cstdint>
#include <vector>

#include "ghk/numeric.hpp"

namespace ghk {

/// C(n, q) with the zero convention. Exact for any n and any q.
BigInt binomial(const BigInt& n, std::int64_t q);

struct BinomialTerm {
    BigInt top;
    std::int64_t bottom = 0;

    friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

class BinomialExpansion {
public:
    BinomialExpansion() = default;

    std::int64_t base_index() const { return base_index_; }
    const std::vector<BinomialTerm>& terms() const { return terms_; }
    const BigInt& value() const { return value_; }
    bool empty() const { return terms_.empty(); }

    /// Leading top n_i; requires a non-empty expansion.
    const BigInt& leading_top() const;

    /// Checks every structural invariant, including that the terms sum to value().
    bool valid() const;

    friend BinomialExpansion macaulay_expand(const BigInt& n, std::int64_t i);

private:
    std::int64_t base_index_ = 1;
    std::vector<BinomialTerm> terms_;
    BigInt value_;
};

/// Greedy i-binomial expansion. n = 0 yields the empty expansion.
BinomialExpansion macaulay_expand(const BigInt& n, std::int64_t i);

/// sum over terms of C(top + b, bottom + a); a shifts bottoms, b shifts tops.
BigInt shift(const BinomialExpansion& exp, std::int64_t a, std::int64_t b);

/// Maximal growth of a Hilbert function from degree d to d+1: ((n)_(d))^{+1}_{+1}.
BigInt macaulay_growth(const BigInt& n, std::int64_t d);

/// Upper bound for a general hyperplane restriction in degree d: ((n)_(d))^{-1}_{0}.
BigInt green_restriction(const BigInt& n, std::int64_t d);

/// s = ((A)_(d))^{-1}_{-1}, the least s with A <= macaulay_growth(s, d-1).
BigInt bg_inverse_min(const BigInt& A, std::int64_t d);

}  // namespace ghk
