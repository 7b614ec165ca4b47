#include "ghk/oracle/sequences.hpp"

#include "ghk/binomial.hpp"

namespace ghk {

bool osequence_check(const HVector& h)
{
    if (h.size() == 0 || h[0] != 1)
        throw PreconditionError("osequence_check: requires h[0] = 1");
    for (std::size_t d = 0; d < h.size(); ++d)
        if (h[d] < 0)
            return false;
    for (std::size_t d = 1; d + 1 < h.size(); ++d) {
        if (h[d + 1] > macaulay_growth(h[d], static_cast<std::int64_t>(d)))
            return false;
    }
    return true;
}

bool si_sequence_check(const HVector& h)
{
    if (h.size() == 0 || h[0] != 1)
        throw PreconditionError("si_sequence_check: requires h[0] = 1");
    if (!h.symmetric())
        return false;
    const std::size_t e = h.size() - 1;
    const std::size_t upto = (e + 1) / 2;
    HVector diff;
    diff.entries.push_back(1);
    for (std::size_t d = 1; d <= upto; ++d) {
        BigInt g = h[d] - h[d - 1];
        if (g < 0)
            return false;
        diff.entries.push_back(std::move(g));
    }
    return osequence_check(diff);
}

}  // namespace ghk
