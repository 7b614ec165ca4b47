#pragma once

#include <cstdint>
#include <vector>

#include "ghk/hvector.hpp"

namespace ghk::oracle {

struct RealizationReport {
    std::int64_t r = 0;
    std::int64_t e = 0;
    bool exact_case = false;
    HVector expected;         // candidate h-vector before any +1
    bool lex_level = false;   // lex ideal of the level part is level
    HVector measured;         // catalecticant ranks with unit coefficients
    bool matched = false;
    bool retried = false;     // unit coefficients fell short; random ones tried
    HVector measured_random;
    bool matched_random = false;
    std::size_t max_matrix_cells = 0;

    bool realized() const { return matched || matched_random; }
};

/// Largest entry count (rows * cols) of any catalecticant the realization of (r, e) builds.
std::size_t realization_matrix_cells(std::int64_t r, std::int64_t e);

/// Realizes the trivial extension of the lex level part of gorenstein_candidate(r, e)
/// as a dual form and measures its Hilbert function over F_p.
RealizationReport realize_candidate(std::int64_t r, std::int64_t e, std::uint32_t p,
                                    std::uint64_t seed);

}  // namespace ghk::oracle
