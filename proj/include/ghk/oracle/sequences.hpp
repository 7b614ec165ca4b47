#pragma once

#include "ghk/hvector.hpp"

namespace ghk {

/// h[d+1] <= macaulay_growth(h[d], d) for every d >= 1. Requires h[0] = 1.
bool osequence_check(const HVector& h);

/// Symmetric, and the first differences (1, h_1 - h_0, ...) through degree
/// ceil(e/2) form an O-sequence. This is the usual SI-sequence condition from
/// the literature on Gorenstein h-vectors.
bool si_sequence_check(const HVector& h);

}  // namespace ghk
