#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace ghk::oracle {

using Exponent = std::vector<int>;

/// All monomials of one degree in num_vars variables, lex-descending
/// (x1 > x2 > ... > xn, so x1^d comes first).
std::vector<Exponent> monomials_lex(int num_vars, int degree);

/// Number of degree-d monomials in n variables, as a machine integer.
std::int64_t monomial_count(int num_vars, int degree);

/// A set of distinct monomials of a fixed degree.
struct MonomialSet {
    int num_vars = 0;
    int degree = 0;
    std::vector<Exponent> exponents;

    /// Distinct entries, correct length, non-negative, each summing to degree.
    bool valid() const;
};

/// Row/column index of each monomial of a degree, in lex-descending order.
std::map<Exponent, std::size_t> monomial_index(int num_vars, int degree);

}  // namespace ghk::oracle
