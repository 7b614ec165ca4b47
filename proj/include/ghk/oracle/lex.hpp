#pragma once

// Lex-segment ideals built monomial by monomial. Independent of the
// binomial-expansion arithmetic so that it can cross-check it.

#include <cstdint>
#include <vector>

#include "ghk/oracle/monomials.hpp"

namespace ghk::oracle {

/// Standard monomials (degree d+1) left after multiplying the lex ideal whose
/// degree-d part is the lex-first C(n+d-1, d) - h_d monomials by all variables.
std::int64_t lex_growth(std::int64_t h_d, int d, int num_vars);

/// Standard monomials of the lex ideal with Hilbert function h (degrees
/// 0..j), one set per degree, each the lex-last h_d monomials. Throws
/// PreconditionError when h does not fit in num_vars variables or the lex
/// segments do not form an ideal (h is not an O-sequence).
std::vector<MonomialSet> lex_standard_monomials(const std::vector<std::int64_t>& h, int num_vars);

/// True when the lex ideal with Hilbert function h, truncated above degree j,
/// has socle only in degree j. Sufficient for h to be a level sequence, not
/// necessary.
bool lex_level_check(const std::vector<std::int64_t>& h, int num_vars);

}  // namespace ghk::oracle
