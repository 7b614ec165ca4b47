#include "ghk/binomial.hpp"

#include <string>

namespace ghk {

BigInt binomial(const BigInt& n, std::int64_t q)
{
    if (q < 0 || n < q)
        return 0;
    // C(n, q) = C(n, n - q); use the smaller side when n is small enough.
    std::int64_t k = q;
    if (n < 2 * q)
        k = (n - q).convert_to<std::int64_t>();
    BigInt result = 1;
    for (std::int64_t j = 1; j <= k; ++j) {
        result *= n - k + j;
        result /= j;
    }
    return result;
}

const BigInt& BinomialExpansion::leading_top() const
{
    if (terms_.empty())
        throw PreconditionError("leading_top of the empty expansion");
    return terms_.front().top;
}

bool BinomialExpansion::valid() const
{
    if (base_index_ < 1)
        return false;
    BigInt sum = 0;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const BinomialTerm& t = terms_[k];
        if (t.bottom != base_index_ - static_cast<std::int64_t>(k) || t.bottom < 1)
            return false;
        if (t.top < t.bottom)
            return false;
        if (k > 0 && !(terms_[k - 1].top > t.top))
            return false;
        sum += binomial(t.top, t.bottom);
    }
    return sum == value_;
}

namespace {

// Largest t in [lo, hi] with C(t, b) <= rem, given C(lo, b) <= rem.
BigInt largest_top(const BigInt& rem, std::int64_t b, BigInt lo, BigInt hi)
{
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (binomial(mid, b) <= rem)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace

BinomialExpansion macaulay_expand(const BigInt& n, std::int64_t i)
{
    if (i < 1)
        throw PreconditionError("macaulay_expand: base index must be >= 1, got " +
                                std::to_string(i));
    if (n < 0)
        throw PreconditionError("macaulay_expand: n must be non-negative");

    BinomialExpansion out;
    out.base_index_ = i;
    out.value_ = n;

    BigInt rem = n;
    BigInt ceiling = -1;  // exclusive upper bound on the next top, -1 = none yet
    for (std::int64_t b = i; b >= 1 && rem > 0; --b) {
        BigInt top;
        if (b == 1) {
            top = rem;
        } else {
            BigInt hi;
            if (ceiling >= 0) {
                hi = ceiling - 1;
            } else {
                hi = b;
                while (binomial(hi, b) <= rem)
                    hi = 2 * hi;
                hi -= 1;
            }
            top = largest_top(rem, b, BigInt(b), hi);
        }
        rem -= binomial(top, b);
        out.terms_.push_back({top, b});
        ceiling = top;
    }
    return out;
}

BigInt shift(const BinomialExpansion& exp, std::int64_t a, std::int64_t b)
{
    BigInt sum = 0;
    for (const BinomialTerm& t : exp.terms())
        sum += binomial(t.top + b, t.bottom + a);
    return sum;
}

BigInt macaulay_growth(const BigInt& n, std::int64_t d)
{
    if (d < 1)
        throw PreconditionError("macaulay_growth: degree must be >= 1");
    return shift(macaulay_expand(n, d), 1, 1);
}

BigInt green_restriction(const BigInt& n, std::int64_t d)
{
    if (d < 1)
        throw PreconditionError("green_restriction: degree must be >= 1");
    return shift(macaulay_expand(n, d), 0, -1);
}

BigInt bg_inverse_min(const BigInt& A, std::int64_t d)
{
    if (A < 1)
        throw PreconditionError("bg_inverse_min: A must be >= 1");
    if (d < 2)
        throw PreconditionError("bg_inverse_min: d must be >= 2");
    return shift(macaulay_expand(A, d), -1, -1);
}

}  // namespace ghk
