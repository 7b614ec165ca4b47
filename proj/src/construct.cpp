#include "ghk/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "ghk/binomial.hpp"
#include "ghk/oracle/sequences.hpp"

namespace ghk {

bool RDecomposition::exact_case() const
{
    return std::all_of(a.begin(), a.end(), [](const BigInt& v) { return v == 0; });
}

RDecomposition decompose_r(std::int64_t r, std::int64_t e)
{
    if (r < 1)
        throw PreconditionError("decompose_r: r must be >= 1");
    if (e < 3)
        throw PreconditionError("decompose_r: e must be >= 3");

    // m + C(m+e-3, e-1) is strictly increasing in m and equals 1 at m = 1.
    std::int64_t m = 1;
    while (BigInt(m + 1) + binomial(BigInt(m + 1 + e - 3), e - 1) <= r)
        ++m;

    RDecomposition out;
    out.r = r;
    out.e = e;
    out.m = m;
    out.a.assign(static_cast<std::size_t>(e - 2), 0);
    const BigInt rem = BigInt(r) - m - binomial(BigInt(m + e - 3), e - 1);
    const BinomialExpansion tail = macaulay_expand(rem, e - 2);
    for (const BinomialTerm& t : tail.terms())
        out.a[static_cast<std::size_t>(e - 2 - t.bottom)] = t.top;
    return out;
}

namespace {

std::vector<BigInt> level_from_type(const BigInt& type, std::int64_t e)
{
    const BinomialExpansion top = macaulay_expand(type, e - 1);
    std::vector<BigInt> h(static_cast<std::size_t>(e));
    h[0] = 1;
    for (std::int64_t i = 1; i <= e - 1; ++i)
        h[static_cast<std::size_t>(i)] = shift(top, -(e - 1 - i), -(e - 1 - i));
    return h;
}

}  // namespace

std::vector<BigInt> minimal_level_hvector(std::int64_t r, std::int64_t e)
{
    const RDecomposition dec = decompose_r(r, e);
    if (r - dec.m < 1)
        throw PreconditionError("minimal_level_hvector: requires r > m (r = " +
                                std::to_string(r) + ", m = " + std::to_string(dec.m) + ")");
    return level_from_type(BigInt(r - dec.m), e);
}

HVector trivial_extension(const std::vector<BigInt>& h)
{
    if (h.empty() || h[0] != 1)
        throw PreconditionError("trivial_extension: level h-vector must start with h_0 = 1");
    const std::size_t j = h.size() - 1;
    std::vector<BigInt> H(j + 2);
    H[0] = 1;
    H[j + 1] = 1;
    for (std::size_t i = 1; i <= j; ++i)
        H[i] = h[i] + h[j + 1 - i];
    return HVector(std::move(H));
}

HVector plus_one(const HVector& H)
{
    if (H.size() < 2 || H[0] != 1 || H.entries.back() != 1 || !H.symmetric())
        throw PreconditionError("plus_one: requires a symmetric vector with H_0 = H_e = 1");
    HVector out = H;
    for (std::size_t i = 1; i + 1 < out.size(); ++i)
        out[i] += 1;
    return out;
}

GorensteinCandidate gorenstein_candidate(std::int64_t r, std::int64_t e)
{
    if (r < 2)
        throw PreconditionError("gorenstein_candidate: r must be >= 2");
    if (e < 3)
        throw PreconditionError("gorenstein_candidate: e must be >= 3");

    GorensteinCandidate out;
    out.r = r;
    out.e = e;
    out.decomposition = decompose_r(r, e);
    out.exact_case = out.decomposition.exact_case();
    out.level_part = level_from_type(BigInt(r - out.decomposition.m), e);
    out.hvector = trivial_extension(out.level_part);
    if (out.exact_case) {
        out.hvector = plus_one(out.hvector);
        out.plus_one_applied = true;
    }
    if (e <= 4)
        out.warnings.push_back("socle degree e <= 4: construction applied uniformly, "
                               "asymptotic argument assumes e >= 5");

    if (out.hvector[1] != r || !out.hvector.symmetric() || !osequence_check(out.hvector))
        throw std::logic_error("gorenstein_candidate: postcondition failed for r=" +
                               std::to_string(r) + ", e=" + std::to_string(e));
    return out;
}

}  // namespace ghk
