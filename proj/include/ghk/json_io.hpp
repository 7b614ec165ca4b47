#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "ghk/hvector.hpp"
#include "ghk/numeric.hpp"

namespace ghk {

/// Largest integer a double-precision JSON consumer represents exactly.
inline const BigInt kJsonSafeInteger = (BigInt(1) << 53) - 1;

/// A JSON number when |value| <= 2^53 - 1, otherwise its decimal string.
nlohmann::ordered_json bigint_json(const BigInt& value);
nlohmann::ordered_json bigints_json(const std::vector<BigInt>& values);
inline nlohmann::ordered_json hvector_json(const HVector& h) { return bigints_json(h.entries); }

}  // namespace ghk
