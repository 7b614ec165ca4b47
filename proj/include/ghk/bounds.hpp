#pragma once

// Lower bounds on Gorenstein h-vectors: the one-step bound from h_i to
// h_{i+1}, the iterated envelope in terms of the codimension r, and the
// unimodality thresholds that follow from the step bound.

#include <cstdint>
#include <vector>

#include "ghk/hvector.hpp"
#include "ghk/numeric.hpp"

namespace ghk {

/// Least h_{i+1} compatible with h_i in a Gorenstein h-vector of socle degree e.
/// With E = (h_i)_(e-i):
///     shift(E, -1, -1) + shift(E, -(e-2i-1), -(e-2i)).
/// Requires 1 <= i and 2i + 2 <= e, h_i >= 1.
BigInt step_lower(const BigInt& h_i, std::int64_t e, std::int64_t i);

struct EnvelopeResult {
    std::int64_t r = 0;
    std::int64_t e = 0;
    // Indexed by degree 0..floor(e/2).
    std::vector<BigInt> lower;        // iterated two-term step bound
    std::vector<BigInt> closed_form;  // shift(r_(e-1), -(i-1), -(i-1)); mid_lower at i = e/2
    std::vector<BigInt> g1;           // C(k-i+1, e-i); leading terms of mid_lower at i = e/2
};

EnvelopeResult envelope_lower(std::int64_t r, std::int64_t e);

/// Closed-form lower bound for the middle entry (even e >= 4):
///     shift(E, -(e/2)+1, -(e/2)+1) + shift(E, -(e/2)+1, -(e/2)),  E = r_(e-1).
BigInt mid_lower(std::int64_t r, std::int64_t e);

/// (i+3)(2e-3i)/2: h_i below this forces h_{i+1} >= h_i. Requires 1 <= i <= e/2 - 1.
BigInt unimodality_threshold(std::int64_t e, std::int64_t i);

/// The implication "h_i < threshold => step_lower(h_i, e, i) >= h_i" evaluated at h_i.
/// Returns true when h_i is at or above the threshold (nothing is claimed).
bool unimodality_guaranteed(const BigInt& h_i, std::int64_t e, std::int64_t i);

/// (i+1)(i+2)...(i+r-1) / ((i+3)(r-1)!) + 3i/2. Socle degrees strictly above
/// this value force unimodality through degree i+1 in codimension r.
Rational e0_bound(std::int64_t r, std::int64_t i);

struct Codim3Row {
    std::int64_t e = 0;
    Rational rhs;         // e0_bound(3, floor(e/2) - 1)
    Rational simplified;  // 2f - (2f+3)/(f+2), f = floor(e/2)
    bool pass = false;    // e > rhs and rhs == simplified
};

struct Codim3Report {
    std::vector<Codim3Row> rows;
    bool all_pass() const;
};

/// Checks the codimension-3 unimodality inequality for every 4 <= e <= e_max.
Codim3Report codim3_unimodality_certificate(std::int64_t e_max);

}  // namespace ghk
