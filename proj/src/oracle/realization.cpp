#include "ghk/oracle/realization.hpp"

#include <algorithm>
#include <random>

#include "ghk/construct.hpp"
#include "ghk/oracle/catalecticant.hpp"
#include "ghk/oracle/lex.hpp"

namespace ghk::oracle {

namespace {

std::vector<std::int64_t> to_machine(const std::vector<BigInt>& h)
{
    std::vector<std::int64_t> out;
    out.reserve(h.size());
    for (const BigInt& v : h)
        out.push_back(to_int64(v));
    return out;
}

}  // namespace

std::size_t realization_matrix_cells(std::int64_t r, std::int64_t e)
{
    const GorensteinCandidate cand = gorenstein_candidate(r, e);
    const int vars = static_cast<int>(to_int64(cand.level_part[1]) + to_int64(cand.level_part.back()));
    std::size_t cells = 0;
    for (int i = 0; i <= e; ++i)
        cells = std::max(cells, static_cast<std::size_t>(monomial_count(vars, i) *
                                                         monomial_count(vars, static_cast<int>(e) - i)));
    return cells;
}

RealizationReport realize_candidate(std::int64_t r, std::int64_t e, std::uint32_t p,
                                    std::uint64_t seed)
{
    const GorensteinCandidate cand = gorenstein_candidate(r, e);
    RealizationReport report;
    report.r = r;
    report.e = e;
    report.exact_case = cand.exact_case;
    report.expected = trivial_extension(cand.level_part);

    const std::vector<std::int64_t> level = to_machine(cand.level_part);
    const int vars = static_cast<int>(level[1]);
    report.lex_level = lex_level_check(level, vars);
    const MonomialSet socle = lex_standard_monomials(level, vars).back();

    const DualForm unit = trivial_extension_form(socle);
    for (int i = 0; i <= unit.degree; ++i)
        report.max_matrix_cells = std::max(
            report.max_matrix_cells,
            static_cast<std::size_t>(monomial_count(unit.num_vars, i) *
                                     monomial_count(unit.num_vars, unit.degree - i)));
    report.measured = catalecticant_hilbert(unit, p);
    report.matched = report.measured == report.expected;
    if (!report.matched) {
        report.retried = true;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint64_t> coeff(1, p - 1);
        std::vector<std::uint64_t> coefficients(socle.exponents.size());
        for (auto& c : coefficients)
            c = coeff(rng);
        report.measured_random = catalecticant_hilbert(trivial_extension_form(socle, coefficients), p);
        report.matched_random = report.measured_random == report.expected;
    }
    return report;
}

}  // namespace ghk::oracle
