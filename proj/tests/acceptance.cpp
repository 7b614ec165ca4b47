// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ghk/asymptotics.hpp"
#include "ghk/binomial.hpp"
#include "ghk/bounds.hpp"
#include "ghk/construct.hpp"
#include "ghk/oracle/catalecticant.hpp"
#include "ghk/oracle/lex.hpp"
#include "ghk/oracle/monomials.hpp"
#include "oracles.hpp"

using namespace ghk;

namespace {

struct Check {
    std::ostringstream detail;
    bool ok = true;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail << what;
        }
    }
};

using Criterion = std::function<void(Check&)>;

void introduction_chain(Check& c)
{
    c.expect(step_lower(125, 8, 1) == 95, "step_lower(125,8,1)");
    c.expect(step_lower(95, 8, 2) == 77, "step_lower(95,8,2)");
    c.expect(step_lower(77, 8, 3) == 70, "step_lower(77,8,3)");
    const HVector expected{1, 125, 95, 77, 71, 77, 95, 125, 1};
    c.expect(gorenstein_candidate(125, 8).hvector == expected, "gorenstein_candidate(125,8)");
}

void bernstein_iarrobino(Check& c)
{
    const HVector h{1, 5, 12, 22, 35, 51, 70, 91, 90, 91, 70, 51, 35, 22, 12, 5, 1};
    c.expect(h.size() == 17, "fixture length");
    c.expect(step_lower(91, 16, 7) == 90, "step_lower(91,16,7) = " + to_string(step_lower(91, 16, 7)));
    for (std::int64_t i = 1; i <= 6; ++i) {
        const BigInt b = step_lower(h[i], 16, i);
        c.expect(b >= h[i], "step_lower(" + to_string(h[i]) + ",16," + std::to_string(i) + ") = " + to_string(b) +
                                " < " + to_string(h[i]));
    }
}

void sharpness_sweep(Check& c)
{
    int cases = 0;
    std::vector<std::string> misses;
    for (std::int64_t e = 6; e <= 14; ++e)
        for (std::int64_t m = 1; m <= e - 2; ++m) {
            const BigInt r = reference::pascal(m + e - 3, e - 1) + m;
            std::vector<BigInt> H;
            if (r == 1) {
                // Codimension one admits only the all-ones vector.
                H.assign(e + 1, 1);
            } else {
                H = gorenstein_candidate(r.convert_to<std::int64_t>(), e).hvector.entries;
            }
            const std::string tag = "(" + std::to_string(e) + "," + std::to_string(m) + ")";
            ++cases;
            if (H[1] != r || step_lower(H[1], e, 1) != H[2]) {
                misses.push_back(tag + " degree 2");
                continue;
            }
            const BigInt b3 = step_lower(H[2], e, 2);
            if (b3 != H[3])
                misses.push_back(tag + " " + to_string(b3) + "<" + to_string(H[3]));
        }
    c.expect(misses.empty(), std::to_string(misses.size()) + "/" + std::to_string(cases) + " (e,m) miss:");
    for (const std::string& miss : misses)
        c.detail << ' ' << miss;
    if (c.ok)
        c.detail << cases << " cases";
}

void non_sharp_fixture(Check& c)
{
    const BigInt b = step_lower(33, 10, 4);
    c.expect(b == 30, "step_lower(33,10,4) = " + to_string(b));
}

void unimodal_property(Check& c)
{
    std::int64_t checked = 0;
    for (std::int64_t e = 4; e <= 30; ++e)
        for (std::int64_t i = 1; 2 * i + 2 <= e; ++i) {
            const Rational t = unimodality_threshold(e, i);
            for (std::int64_t h = 1; Rational(h) < t; ++h) {
                ++checked;
                if (step_lower(h, e, i) < h) {
                    c.expect(false, "violation e=" + std::to_string(e) + " i=" + std::to_string(i) +
                                        " h=" + std::to_string(h));
                    return;
                }
            }
        }
    c.detail << checked << " values, 0 violations";
}

void codim3_certificate(Check& c)
{
    const Codim3Report rep = codim3_unimodality_certificate(200);
    c.expect(rep.all_pass(), "certificate failed");
    c.expect(rep.rows.size() == 197, "row count");
    c.detail << rep.rows.size() << " socle degrees";
}

void cor4_identity(Check& c)
{
    for (std::int64_t i = 1; i <= 50; ++i)
        c.expect(e0_bound(4, i) == Rational(i * i + 12 * i + 2, 6), "i=" + std::to_string(i));
}

void bg_suite(Check& c)
{
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::int64_t> value(1, 1'000'000);
    std::uniform_int_distribution<std::int64_t> degree(2, 12);
    int violations = 0;
    for (int k = 0; k < 500; ++k) {
        const std::int64_t A = value(rng);
        const std::int64_t d = degree(rng);
        const BigInt s = bg_inverse_min(A, d);
        if (!(BigInt(A) <= macaulay_growth(s, d - 1) && (s == 0 || BigInt(A) > macaulay_growth(s - 1, d - 1))))
            ++violations;
    }
    for (int k = 0; k < 500; ++k) {
        const std::int64_t A = value(rng);
        const std::int64_t d = degree(rng);
        const BinomialExpansion base = macaulay_expand(A, d);
        BigInt x = A;
        for (std::int64_t i = 0; i <= d - 2; ++i) {
            x = bg_inverse_min(x, d - i);
            if (x != shift(base, -(i + 1), -(i + 1))) {
                ++violations;
                break;
            }
        }
    }
    c.expect(violations == 0, std::to_string(violations) + " violations");
    if (c.ok)
        c.detail << "1000 cases, 0 violations";
}

void oracle_equivalence(Check& c)
{
    int mismatches = 0, cases = 0;
    for (int d = 1; d <= 3; ++d)
        for (std::int64_t h = 1; h <= 60; ++h) {
            int n0 = 1;
            while (oracle::monomial_count(n0, d) < h)
                ++n0;
            const BigInt expected = macaulay_growth(h, d);
            for (int n = n0; n <= n0 + 2; ++n, ++cases)
                if (BigInt(oracle::lex_growth(h, d, n)) != expected)
                    ++mismatches;
        }
    c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
    c.detail << cases << " cases";
}

void compressed_oracle(Check& c)
{
    for (int r : {2, 3, 4})
        for (int e : {4, 5, 6}) {
            const HVector top = oracle::compressed_hvector(r, e);
            int equal = 0;
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                std::mt19937_64 rng(1000 * r + 100 * e + seed);
                const HVector h = oracle::catalecticant_hilbert(oracle::random_form(r, e, oracle::kDefaultPrime, rng),
                                                                oracle::kDefaultPrime);
                for (std::size_t d = 0; d < h.size(); ++d)
                    c.expect(h[d] <= top[d], "exceeds compressed r=" + std::to_string(r) + " e=" + std::to_string(e));
                if (h == top)
                    ++equal;
            }
            c.expect(equal * 100 >= 95 * 20,
                     "r=" + std::to_string(r) + " e=" + std::to_string(e) + " only " + std::to_string(equal) + "/20");
        }
    c.detail << "9 (r,e) pairs x 20 forms";
}

void tiny_realization(Check& c)
{
    const GorensteinCandidate cand = gorenstein_candidate(4, 8);
    std::vector<std::int64_t> level;
    for (const BigInt& v : cand.level_part)
        level.push_back(v.convert_to<std::int64_t>());
    const oracle::MonomialSet socle = oracle::lex_standard_monomials(level, static_cast<int>(level[1])).back();
    const HVector got = oracle::catalecticant_hilbert(oracle::trivial_extension_form(socle), oracle::kDefaultPrime);
    c.expect(got == HVector{1, 4, 4, 4, 4, 4, 4, 4, 1}, "candidate (4,8) realization");

    oracle::DualForm f;
    f.num_vars = 4;
    f.degree = 4;
    f.terms = {{{1, 2, 1, 0}, 1}, {{0, 3, 0, 1}, 1}};
    c.expect(oracle::catalecticant_hilbert(f, oracle::kDefaultPrime) == HVector{1, 4, 4, 4, 1},
             "z1*x1*x2^2 + z2*x2^3");
}

void stanley_sandwich(Check& c)
{
    const ConvergenceReport rep = convergence_report(4, 2, 1'000'000'000, 4, std::thread::hardware_concurrency());
    const RatioRow& last = rep.final_row();
    c.expect(last.r == 1'000'000'000, "final sample is not 10^9");
    c.expect(last.gap_g() < Real("0.1"), "g gap " + to_string(last.gap_g(), 6));
    c.expect(last.gap_h() < Real("0.1"), "h gap " + to_string(last.gap_h(), 6));
    c.expect(rep.sandwiched(), rep.errors.empty() ? "" : rep.errors.front());
    c.expect(rep.trend_decreasing(), "mean gap does not shrink");
    c.detail << "g_ratio=" << to_string(last.g_ratio, 8) << " h_ratio=" << to_string(last.h_ratio, 8)
             << " limit=" << to_string(last.limit, 8);
}

void general_trend(Check& c)
{
    const std::vector<std::pair<int, int>> cases{{5, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}};
    for (const auto& [e, i] : cases) {
        const ConvergenceReport rep = convergence_report(e, i, 1'000'000'000, 4, std::thread::hardware_concurrency());
        const RatioRow& last = rep.final_row();
        const std::string tag = "(" + std::to_string(e) + "," + std::to_string(i) + ")";
        c.expect(last.gap_g() < Real("0.25"), tag + " g gap " + to_string(last.gap_g(), 6));
        c.expect(last.gap_h() < Real("0.25"), tag + " h gap " + to_string(last.gap_h(), 6));
        c.expect(rep.trend_decreasing(), tag + " trend");
        if (2 * i == e) {
            // Doubled constant: the candidate must sit nearer to it than to its half.
            const Real half = last.limit / 2;
            c.expect(boost::multiprecision::abs(last.h_ratio - last.limit) <
                         boost::multiprecision::abs(last.h_ratio - half),
                     tag + " middle row does not show the doubled limit");
        }
        c.detail << tag << " g=" << to_string(last.gap_g(), 3) << " h=" << to_string(last.gap_h(), 3) << "; ";
    }
}

void kleinschmidt(Check& c)
{
    for (std::int64_t e = 3; e <= 1000; ++e)
        if (!kleinschmidt_consistency(e)) {
            c.expect(false, "e=" + std::to_string(e));
            return;
        }
    c.detail << "3 <= e <= 1000";
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, Criterion>> criteria{
        {"introduction example chain", introduction_chain},
        {"Bernstein-Iarrobino fixture", bernstein_iarrobino},
        {"sharpness sweep", sharpness_sweep},
        {"non-sharp fixture", non_sharp_fixture},
        {"unimodality below threshold", unimodal_property},
        {"codimension-3 unimodality certificate", codim3_certificate},
        {"codimension-4 e0 identity", cor4_identity},
        {"inverse-growth property suite", bg_suite},
        {"lex growth oracle equivalence", oracle_equivalence},
        {"compressed catalecticant oracle", compressed_oracle},
        {"tiny realization", tiny_realization},
        {"Stanley constant sandwich", stanley_sandwich},
        {"general limit trend", general_trend},
        {"Kleinschmidt exponent identity", kleinschmidt},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Check c;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[k].second(c);
        } catch (const std::exception& ex) {
            c.ok = false;
            c.detail << "exception: " << ex.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!c.ok)
            ++failures;
        std::printf("%s %2zu %s (%.2fs) %s\n", c.ok ? "PASS" : "FAIL", k + 1, criteria[k].first, secs,
                    c.detail.str().c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
