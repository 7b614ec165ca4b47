#include "ghk/asymptotics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <ostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "ghk/bounds.hpp"
#include "ghk/construct.hpp"
#include "ghk/json_io.hpp"

namespace ghk {

namespace {

BigInt factorial(std::int64_t n)
{
    BigInt out = 1;
    for (std::int64_t k = 2; k <= n; ++k)
        out *= k;
    return out;
}

Real relative_gap(const Real& value, const Real& limit)
{
    return boost::multiprecision::abs(value - limit) / limit;
}

void require_degree(std::int64_t e, std::int64_t i, const char* who)
{
    if (e < 3)
        throw PreconditionError(std::string(who) + ": e must be >= 3");
    if (i < 1 || i > e / 2)
        throw PreconditionError(std::string(who) + ": degree i=" + std::to_string(i) +
                                " outside 1..floor(e/2); use symmetry for higher degrees");
}

}  // namespace

Real rational_power(const BigInt& base, const Rational& exponent)
{
    const BigInt num = boost::multiprecision::numerator(exponent);
    const BigInt den = boost::multiprecision::denominator(exponent);
    if (den == 1 && num >= 0)
        return Real(boost::multiprecision::pow(base, num.convert_to<unsigned>()));
    return boost::multiprecision::pow(Real(base), Real(num) / Real(den));
}

Real limit_value(std::int64_t e, std::int64_t i)
{
    require_degree(e, i, "limit_value");
    const Rational exponent(e - i, e - 1);
    Real value = rational_power(factorial(e - 1), exponent) / Real(factorial(e - i));
    if (2 * i == e)
        value *= 2;
    return value;
}

Real RatioRow::gap_g() const { return relative_gap(g_ratio, limit); }
Real RatioRow::gap_h() const { return relative_gap(h_ratio, limit); }
Real RatioRow::gap_closed() const { return relative_gap(closed_ratio, limit); }

namespace {

RatioRow make_row(std::int64_t e, std::int64_t i, std::int64_t r, const Real& limit)
{
    if (r < 2)
        throw PreconditionError("ratio_table: every r must be >= 2");
    const EnvelopeResult env = envelope_lower(r, e);
    const GorensteinCandidate cand = gorenstein_candidate(r, e);
    RatioRow row;
    row.r = r;
    row.i = i;
    row.g_value = env.lower[static_cast<std::size_t>(i)];
    row.closed_value = env.closed_form[static_cast<std::size_t>(i)];
    row.g1_value = env.g1[static_cast<std::size_t>(i)];
    row.h_value = cand.hvector[static_cast<std::size_t>(i)];
    row.exponent = Rational(e - i, e - 1);
    const Real scale = rational_power(BigInt(r), row.exponent);
    row.g_ratio = Real(row.g_value) / scale;
    row.h_ratio = Real(row.h_value) / scale;
    row.closed_ratio = Real(row.closed_value) / scale;
    row.limit = limit;
    return row;
}

}  // namespace

std::vector<RatioRow> ratio_table(std::int64_t e, std::int64_t i,
                                  const std::vector<std::int64_t>& r_values, unsigned jobs)
{
    require_degree(e, i, "ratio_table");
    const Real limit = limit_value(e, i);
    std::vector<RatioRow> rows(r_values.size());
    jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(1, r_values.size())));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (std::size_t k = next++; k < r_values.size(); k = next++) {
            try {
                rows[k] = make_row(e, i, r_values[k], limit);
            } catch (...) {
                if (!failed.exchange(true))
                    failure = std::current_exception();
                return;
            }
        }
    };
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(work);
    }
    if (failure)
        std::rethrow_exception(failure);
    return rows;
}

bool kleinschmidt_consistency(std::int64_t e)
{
    if (e < 3)
        throw PreconditionError("kleinschmidt_consistency: e must be >= 3");
    return Rational(e - e / 2, e - 1) == Rational((e + 1) / 2, e - 1);
}

bool ConvergenceReport::trend_decreasing() const
{
    return last_decade_gap_g < first_decade_gap_g && last_decade_gap_h < first_decade_gap_h;
}

std::vector<std::int64_t> geometric_samples(std::int64_t r_max, std::int64_t points_per_decade)
{
    if (r_max < 100)
        throw PreconditionError("convergence_report: r_max must be >= 100");
    if (points_per_decade < 1)
        throw PreconditionError("convergence_report: points_per_decade must be >= 1");
    std::vector<std::int64_t> out;
    for (std::int64_t k = points_per_decade;; ++k) {
        const Real x = boost::multiprecision::pow(Real(10), Real(k) / points_per_decade);
        const auto r = boost::multiprecision::round(x).convert_to<std::int64_t>();
        if (r > r_max)
            break;
        if (out.empty() || out.back() != r)
            out.push_back(r);
    }
    if (out.back() != r_max)
        out.push_back(r_max);
    return out;
}

namespace {

std::int64_t decade_of(std::int64_t r)
{
    std::int64_t d = 0;
    for (; r >= 10; r /= 10)
        ++d;
    return d;
}

}  // namespace

ConvergenceReport convergence_report(std::int64_t e, std::int64_t i, std::int64_t r_max,
                                     std::int64_t points_per_decade, unsigned jobs)
{
    ConvergenceReport report;
    report.e = e;
    report.i = i;
    report.rows = ratio_table(e, i, geometric_samples(r_max, points_per_decade), jobs);
    for (const RatioRow& row : report.rows) {
        if (row.g_value > row.h_value || row.g_ratio > row.h_ratio)
            report.errors.push_back("r=" + std::to_string(row.r) + ": lower envelope " +
                                    to_string(row.g_value) + " exceeds candidate " +
                                    to_string(row.h_value));
    }

    const std::int64_t first = decade_of(report.rows.front().r);
    const std::int64_t last = decade_of(report.rows.back().r);
    auto mean_gaps = [&](std::int64_t decade, Real& gap_g, Real& gap_h) {
        gap_g = 0;
        gap_h = 0;
        int count = 0;
        for (const RatioRow& row : report.rows) {
            if (decade_of(row.r) != decade)
                continue;
            gap_g += row.gap_g();
            gap_h += row.gap_h();
            ++count;
        }
        gap_g /= count;
        gap_h /= count;
    };
    mean_gaps(first, report.first_decade_gap_g, report.first_decade_gap_h);
    mean_gaps(last, report.last_decade_gap_g, report.last_decade_gap_h);
    return report;
}

void write_csv(std::ostream& out, const std::vector<RatioRow>& rows)
{
    out << kRatioCsvHeader << '\n';
    for (const RatioRow& row : rows) {
        out << row.r << ',' << row.i << ',' << row.g_value << ',' << row.h_value << ','
            << to_string(row.g_ratio) << ',' << to_string(row.h_ratio) << ','
            << to_string(row.limit) << ',' << to_string(row.gap_g()) << ','
            << to_string(row.gap_h()) << '\n';
    }
}

void write_jsonl(std::ostream& out, const std::vector<RatioRow>& rows)
{
    for (const RatioRow& row : rows) {
        const nlohmann::ordered_json j = {
            {"r", row.r},
            {"i", row.i},
            {"g_value", bigint_json(row.g_value)},
            {"closed_value", bigint_json(row.closed_value)},
            {"g1_value", bigint_json(row.g1_value)},
            {"h_value", bigint_json(row.h_value)},
            {"exponent", to_string(row.exponent)},
            {"g_ratio", to_string(row.g_ratio)},
            {"h_ratio", to_string(row.h_ratio)},
            {"closed_ratio", to_string(row.closed_ratio)},
            {"limit", to_string(row.limit)},
            {"gap_g", to_string(row.gap_g())},
            {"gap_h", to_string(row.gap_h())},
        };
        out << j.dump() << '\n';
    }
}

}  // namespace ghk
