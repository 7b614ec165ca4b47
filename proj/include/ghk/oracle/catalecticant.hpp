#pragma once

// Hilbert functions of Gorenstein algebras given by a dual form F over F_p:
// h_i is the rank of the contraction catalecticant Cat_i(F).

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ghk/hvector.hpp"
#include "ghk/oracle/modular.hpp"
#include "ghk/oracle/monomials.hpp"

namespace ghk::oracle {

inline constexpr std::uint32_t kDefaultPrime = 32003;

struct DualForm {
    int num_vars = 0;
    int degree = 0;
    std::vector<std::pair<Exponent, std::uint64_t>> terms;

    /// Exponents have num_vars entries summing to degree; coefficients nonzero.
    bool valid() const;
};

// {"num_vars": n, "degree": d, "terms": [[[e1, ..., en], coeff], ...]}
void to_json(nlohmann::json& j, const DualForm& form);
void from_json(const nlohmann::json& j, DualForm& form);

/// Rows: degree-i monomials; columns: degree-(e-i) monomials; entry (u, v) is
/// the coefficient of u+v in F reduced mod p. Both bases in lex-descending order.
ModMatrix catalecticant_matrix(const DualForm& form, int i, std::uint32_t p);

/// (rank Cat_0, ..., rank Cat_e). Requires p prime, p > 2 * degree, F nonzero mod p.
HVector catalecticant_hilbert(const DualForm& form, std::uint32_t p);

/// min(C(r-1+i, i), C(r-1+e-i, e-i)) for 0 <= i <= e.
HVector compressed_hvector(std::int64_t r, std::int64_t e);

/// F = sum_t z_t * w_t in (m + t) variables (x_1..x_m, z_1..z_t), degree w + 1.
/// `coefficients` defaults to all ones when empty.
DualForm trivial_extension_form(const MonomialSet& level_socle,
                                const std::vector<std::uint64_t>& coefficients = {});

/// Every degree-e monomial in num_vars variables with a uniform coefficient in
/// [0, p); zero draws are dropped.
DualForm random_form(int num_vars, int degree, std::uint32_t p, std::mt19937_64& rng);

}  // namespace ghk::oracle
