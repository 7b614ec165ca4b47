#include "ghk/bounds.hpp"

#include <algorithm>
#include <string>

#include "ghk/binomial.hpp"

namespace ghk {

namespace {

void require_step_range(std::int64_t e, std::int64_t i, const char* who)
{
    if (i < 1 || 2 * i + 2 > e)
        throw PreconditionError(std::string(who) + ": bound not applicable at degree i=" +
                                std::to_string(i) + " for e=" + std::to_string(e) +
                                " (need 1 <= i <= e/2 - 1)");
}

}  // namespace

BigInt step_lower(const BigInt& h_i, std::int64_t e, std::int64_t i)
{
    require_step_range(e, i, "step_lower");
    if (h_i < 1)
        throw PreconditionError("step_lower: h_i must be positive");
    const BinomialExpansion E = macaulay_expand(h_i, e - i);
    return shift(E, -1, -1) + shift(E, -(e - 2 * i - 1), -(e - 2 * i));
}

EnvelopeResult envelope_lower(std::int64_t r, std::int64_t e)
{
    if (r < 1)
        throw PreconditionError("envelope_lower: r must be >= 1");
    if (e < 3)
        throw PreconditionError("envelope_lower: e must be >= 3");

    const std::int64_t half = e / 2;
    EnvelopeResult out;
    out.r = r;
    out.e = e;
    out.lower.assign(half + 1, 0);
    out.closed_form.assign(half + 1, 0);
    out.g1.assign(half + 1, 0);

    out.lower[0] = 1;
    out.lower[1] = r;
    for (std::int64_t i = 1; i + 1 <= half; ++i)
        out.lower[i + 1] = step_lower(out.lower[i], e, i);

    const BinomialExpansion E = macaulay_expand(BigInt(r), e - 1);
    const BigInt& k = E.leading_top();
    out.closed_form[0] = 1;
    out.g1[0] = 1;
    for (std::int64_t i = 1; i <= half; ++i) {
        if (2 * i == e) {
            out.closed_form[i] = mid_lower(r, e);
            out.g1[i] = binomial(k - i + 1, e - i) + binomial(k - i, e - i);
        } else {
            out.closed_form[i] = shift(E, -(i - 1), -(i - 1));
            out.g1[i] = binomial(k - i + 1, e - i);
        }
    }
    return out;
}

BigInt mid_lower(std::int64_t r, std::int64_t e)
{
    if (e < 4 || e % 2 != 0)
        throw PreconditionError("mid_lower: e must be even and >= 4, got " + std::to_string(e));
    if (r < 1)
        throw PreconditionError("mid_lower: r must be >= 1");
    const std::int64_t half = e / 2;
    const BinomialExpansion E = macaulay_expand(BigInt(r), e - 1);
    return shift(E, -half + 1, -half + 1) + shift(E, -half + 1, -half);
}

BigInt unimodality_threshold(std::int64_t e, std::int64_t i)
{
    require_step_range(e, i, "unimodality_threshold");
    return BigInt(i + 3) * BigInt(2 * e - 3 * i) / 2;
}

bool unimodality_guaranteed(const BigInt& h_i, std::int64_t e, std::int64_t i)
{
    if (h_i >= unimodality_threshold(e, i))
        return true;
    return step_lower(h_i, e, i) >= h_i;
}

Rational e0_bound(std::int64_t r, std::int64_t i)
{
    if (r < 2)
        throw PreconditionError("e0_bound: r must be >= 2");
    if (i < 1)
        throw PreconditionError("e0_bound: i must be >= 1");
    BigInt rising = 1;
    BigInt fact = 1;
    for (std::int64_t j = 1; j <= r - 1; ++j) {
        rising *= i + j;
        fact *= j;
    }
    return Rational(rising, fact * (i + 3)) + Rational(3 * i, 2);
}

bool Codim3Report::all_pass() const
{
    return !rows.empty() &&
           std::all_of(rows.begin(), rows.end(), [](const Codim3Row& row) { return row.pass; });
}

Codim3Report codim3_unimodality_certificate(std::int64_t e_max)
{
    if (e_max < 4)
        throw PreconditionError("codim3_unimodality_certificate: e_max must be >= 4");
    Codim3Report report;
    for (std::int64_t e = 4; e <= e_max; ++e) {
        const std::int64_t f = e / 2;
        Codim3Row row;
        row.e = e;
        row.rhs = Rational(f * (f + 1), 2 * (f + 2)) + Rational(3 * (f - 1), 2);
        row.simplified = Rational(2 * f) - Rational(2 * f + 3, f + 2);
        row.pass = Rational(e) > row.rhs && row.rhs == row.simplified &&
                   row.rhs == e0_bound(3, f - 1);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace ghk
