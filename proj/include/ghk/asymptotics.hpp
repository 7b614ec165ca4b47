#pragma once

// Normalized sandwiches f_{e,i}(r) / r^{(e-i)/(e-1)}: lower envelope versus
// the constructed candidate, compared against the limiting constant.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ghk/numeric.hpp"

namespace ghk {

/// ((e-1)!)^{(e-i)/(e-1)} / (e-i)! for i < e/2, and twice the same expression
/// at i = e/2 (even e only). Requires e >= 3 and 1 <= i <= floor(e/2).
Real limit_value(std::int64_t e, std::int64_t i);

/// base^exponent; exact when the exponent is an integer.
Real rational_power(const BigInt& base, const Rational& exponent);

struct RatioRow {
    std::int64_t r = 0;
    std::int64_t i = 0;
    BigInt g_value;       // two-term envelope at degree i
    BigInt closed_value;  // one-term closed form (mid_lower at i = e/2)
    BigInt g1_value;      // binomial closed form in the leading top of r_(e-1)
    BigInt h_value;       // constructed candidate entry H_i
    Rational exponent;    // (e-i)/(e-1)
    Real g_ratio;
    Real h_ratio;
    Real closed_ratio;
    Real limit;

    Real gap_g() const;
    Real gap_h() const;
    Real gap_closed() const;
};

/// One row per r (each r >= 2). Rows are computed on up to `jobs` threads.
std::vector<RatioRow> ratio_table(std::int64_t e, std::int64_t i,
                                  const std::vector<std::int64_t>& r_values, unsigned jobs = 1);

/// (e - floor(e/2))/(e-1) == floor((e+1)/2)/(e-1) as exact rationals.
bool kleinschmidt_consistency(std::int64_t e);

struct ConvergenceReport {
    std::int64_t e = 0;
    std::int64_t i = 0;
    std::vector<RatioRow> rows;
    std::vector<std::string> errors;  // one entry per row that is not sandwiched
    Real first_decade_gap_g, first_decade_gap_h;
    Real last_decade_gap_g, last_decade_gap_h;

    bool sandwiched() const { return errors.empty(); }
    bool trend_decreasing() const;
    const RatioRow& final_row() const { return rows.back(); }
};

/// Geometric sample 10^{k/K} for K = points_per_decade, from 10 up to r_max,
/// with r_max itself appended. Requires r_max >= 100.
std::vector<std::int64_t> geometric_samples(std::int64_t r_max, std::int64_t points_per_decade);

ConvergenceReport convergence_report(std::int64_t e, std::int64_t i, std::int64_t r_max,
                                     std::int64_t points_per_decade, unsigned jobs = 1);

inline constexpr const char* kRatioCsvHeader = "r,i,g_value,h_value,g_ratio,h_ratio,limit,gap_g,gap_h";

void write_csv(std::ostream& out, const std::vector<RatioRow>& rows);
void write_jsonl(std::ostream& out, const std::vector<RatioRow>& rows);

}  // namespace ghk
