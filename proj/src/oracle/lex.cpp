#include "ghk/oracle/lex.hpp"

#include <set>
#include <string>

#include "ghk/numeric.hpp"

namespace ghk::oracle {

namespace {

std::set<Exponent> multiples(const std::vector<Exponent>& gens, int num_vars)
{
    std::set<Exponent> out;
    for (const Exponent& g : gens) {
        for (int v = 0; v < num_vars; ++v) {
            Exponent x = g;
            ++x[v];
            out.insert(std::move(x));
        }
    }
    return out;
}

}  // namespace

std::int64_t lex_growth(std::int64_t h_d, int d, int num_vars)
{
    if (d < 1 || num_vars < 1)
        throw PreconditionError("lex_growth: requires d >= 1 and num_vars >= 1");
    const std::int64_t total = monomial_count(num_vars, d);
    if (h_d < 0 || h_d > total)
        throw PreconditionError("lex_growth: h_d = " + std::to_string(h_d) +
                                " exceeds the " + std::to_string(total) +
                                " monomials of degree " + std::to_string(d));
    std::vector<Exponent> degree_d = monomials_lex(num_vars, d);
    degree_d.resize(static_cast<std::size_t>(total - h_d));
    const std::set<Exponent> ideal_next = multiples(degree_d, num_vars);
    return monomial_count(num_vars, d + 1) - static_cast<std::int64_t>(ideal_next.size());
}

std::vector<MonomialSet> lex_standard_monomials(const std::vector<std::int64_t>& h, int num_vars)
{
    if (h.empty() || h[0] != 1)
        throw PreconditionError("lex ideal: requires h_0 = 1");
    if (num_vars < 1)
        throw PreconditionError("lex ideal: num_vars must be >= 1");

    std::vector<MonomialSet> standard;
    std::set<Exponent> ideal_prev;  // ideal part in degree d-1
    for (std::size_t d = 0; d < h.size(); ++d) {
        std::vector<Exponent> all = monomials_lex(num_vars, static_cast<int>(d));
        const auto total = static_cast<std::int64_t>(all.size());
        if (h[d] < 0 || h[d] > total)
            throw PreconditionError("lex ideal: h_" + std::to_string(d) + " = " +
                                    std::to_string(h[d]) + " does not fit in " +
                                    std::to_string(num_vars) + " variables");
        const std::size_t cut = static_cast<std::size_t>(total - h[d]);
        std::set<Exponent> ideal(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(cut));
        for (const Exponent& x : multiples({ideal_prev.begin(), ideal_prev.end()}, num_vars)) {
            if (!ideal.count(x))
                throw PreconditionError("lex ideal: h is not an O-sequence (fails at degree " +
                                        std::to_string(d) + ")");
        }
        MonomialSet set;
        set.num_vars = num_vars;
        set.degree = static_cast<int>(d);
        set.exponents.assign(all.begin() + static_cast<std::ptrdiff_t>(cut), all.end());
        standard.push_back(std::move(set));
        ideal_prev = std::move(ideal);
    }
    return standard;
}

bool lex_level_check(const std::vector<std::int64_t>& h, int num_vars)
{
    const std::vector<MonomialSet> standard = lex_standard_monomials(h, num_vars);
    if (h.back() < 1)
        throw PreconditionError("lex_level_check: requires h_j >= 1");
    for (std::size_t d = 0; d + 1 < standard.size(); ++d) {
        const std::set<Exponent> next(standard[d + 1].exponents.begin(),
                                      standard[d + 1].exponents.end());
        for (const Exponent& u : standard[d].exponents) {
            bool in_socle = true;
            for (int v = 0; v < num_vars && in_socle; ++v) {
                Exponent x = u;
                ++x[v];
                if (next.count(x))
                    in_socle = false;
            }
            if (in_socle)
                return false;
        }
    }
    return true;
}

}  // namespace ghk::oracle
