#pragma once

// Explicit Gorenstein h-vectors of codimension r and socle degree e with
// small entries: a minimal level h-vector of type r - m, its trivial
// extension, and (when r = m + C(m+e-3, e-1)) a final +1 on the interior.

#include <cstdint>
#include <string>
#include <vector>

#include "ghk/hvector.hpp"
#include "ghk/numeric.hpp"

namespace ghk {

/// r = m + C(m+e-3, e-1) + sum_j C(a_j, j), with m maximal.
struct RDecomposition {
    std::int64_t r = 0;
    std::int64_t e = 0;
    std::int64_t m = 0;
    // a[0] = a_{e-2}, a[1] = a_{e-3}, ..., a[e-3] = a_1; zero at unused bottoms.
    std::vector<BigInt> a;

    /// True when every a_j is zero, i.e. r = m + C(m+e-3, e-1).
    bool exact_case() const;
    /// a_j for 1 <= j <= e-2.
    const BigInt& a_at(std::int64_t j) const { return a[static_cast<std::size_t>(e - 2 - j)]; }
};

RDecomposition decompose_r(std::int64_t r, std::int64_t e);

/// The lex-minimal level h-vector (degrees 0..e-1) of type h_{e-1} = r - m.
std::vector<BigInt> minimal_level_hvector(std::int64_t r, std::int64_t e);

/// H_0 = H_{j+1} = 1, H_i = h_i + h_{j+1-i}; h is given for degrees 0..j.
HVector trivial_extension(const std::vector<BigInt>& h);

/// Adds 1 to every interior entry of a symmetric H with H_0 = H_e = 1.
HVector plus_one(const HVector& H);

struct GorensteinCandidate {
    HVector hvector;
    std::int64_t r = 0;
    std::int64_t e = 0;
    bool exact_case = false;
    bool plus_one_applied = false;
    std::vector<BigInt> level_part;
    RDecomposition decomposition;
    std::vector<std::string> warnings;
};

GorensteinCandidate gorenstein_candidate(std::int64_t r, std::int64_t e);

}  // namespace ghk
