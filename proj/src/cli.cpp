#include "ghk/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ghk/asymptotics.hpp"
#include "ghk/binomial.hpp"
#include "ghk/bounds.hpp"
#include "ghk/construct.hpp"
#include "ghk/json_io.hpp"
#include "ghk/kernels/rowops.hpp"
#include "ghk/oracle/catalecticant.hpp"
#include "ghk/oracle/lex.hpp"
#include "ghk/oracle/realization.hpp"
#include "ghk/oracle/sequences.hpp"

namespace ghk::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CommandResult {
    std::string command;
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::vector<std::string> warnings;
    // Set by `table` in csv/jsonl mode: the ratio rows are written verbatim.
    std::vector<RatioRow> ratio_rows;
    bool has_ratio_rows = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw PreconditionError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// "1,5,12" or "@path" (path holds comma- or whitespace-separated entries).
HVector parse_hvector(const std::string& spec)
{
    std::string text = spec;
    if (!spec.empty() && spec[0] == '@')
        text = read_file(spec.substr(1));
    for (char& c : text)
        if (c == '\n' || c == '\r' || c == '\t' || c == ' ')
            c = ',';
    HVector h;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty())
            continue;
        h.entries.push_back(parse_bigint(token));
    }
    if (h.entries.empty())
        throw PreconditionError("empty h-vector '" + spec + "'");
    return h;
}

std::vector<std::int64_t> to_machine(const HVector& h)
{
    std::vector<std::int64_t> out;
    for (const BigInt& v : h.entries)
        out.push_back(to_int64(v));
    return out;
}

unsigned default_jobs()
{
    if (const char* env = std::getenv("GHK_JOBS"))
        return static_cast<unsigned>(std::max<std::int64_t>(1, parse_int(env)));
    return std::max(1u, std::thread::hardware_concurrency());
}

std::uint32_t default_prime()
{
    if (const char* env = std::getenv("GHK_PRIME")) {
        const std::int64_t p = parse_int(env);
        if (p < 2 || p > 0xFFFFFFFFLL)
            throw PreconditionError("GHK_PRIME out of range '" + std::string(env) + "'");
        return static_cast<std::uint32_t>(p);
    }
    return oracle::kDefaultPrime;
}

Json expansion_json(const BinomialExpansion& exp)
{
    Json terms = Json::array();
    for (const BinomialTerm& t : exp.terms())
        terms.push_back(Json{{"top", bigint_json(t.top)}, {"bottom", t.bottom}});
    return Json{{"base_index", exp.base_index()}, {"terms", terms}, {"value", bigint_json(exp.value())}};
}

Json rational_json(const Rational& q)
{
    return Json{{"result", to_string(q)},
                {"numerator", bigint_json(boost::multiprecision::numerator(q))},
                {"denominator", bigint_json(boost::multiprecision::denominator(q))},
                {"decimal", to_string(Real(q), 30)}};
}

Json ratio_row_json(const RatioRow& row)
{
    return Json{{"r", row.r},
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
                {"gap_h", to_string(row.gap_h())}};
}

std::string csv_cell(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (std::size_t k = 0; k < v.size(); ++k)
            s += (k ? ";" : "") + csv_cell(v[k]);
        return s;
    }
    return v.dump();
}

void emit(const CommandResult& result, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        Json j;
        j["command"] = result.command;
        j["inputs"] = result.inputs;
        for (const auto& [key, value] : result.outputs.items())
            j[key] = value;
        j["warnings"] = result.warnings;
        out << j.dump() << '\n';
        return;
    }
    if (result.has_ratio_rows) {
        if (format == "csv")
            write_csv(out, result.ratio_rows);
        else
            write_jsonl(out, result.ratio_rows);
        return;
    }
    if (format == "jsonl") {
        throw PreconditionError("--format jsonl is only supported by 'table'");
    }
    // csv: "rows" tables become a header plus one line per row, other payloads key,value.
    if (result.outputs.contains("rows") && result.outputs["rows"].is_array() &&
        !result.outputs["rows"].empty()) {
        const Json& rows = result.outputs["rows"];
        std::string header;
        for (const auto& [key, value] : rows[0].items())
            header += (header.empty() ? "" : ",") + key;
        out << header << '\n';
        for (const Json& row : rows) {
            std::string line;
            bool first = true;
            for (const auto& [key, value] : row.items()) {
                line += (first ? "" : ",") + csv_cell(value);
                first = false;
            }
            out << line << '\n';
        }
        return;
    }
    out << "key,value\n";
    for (const auto& [key, value] : result.outputs.items())
        out << key << ',' << csv_cell(value) << '\n';
}

// Options are captured as strings and converted with parse_int so that
// malformed tokens are reported by name.
struct Args {
    std::string n, base, a, b, deg, e, i, r, emax, vars, prime, rmax, per_decade, jobs, form, hvec;
};

std::int64_t need(const std::string& token, const char* name)
{
    if (token.empty())
        throw PreconditionError(std::string("missing value for ") + name);
    return parse_int(token);
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Gorenstein h-vector bounds, constructions and oracles", "ghk"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    std::string seed_token = "0";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "jsonl"}));
    app.add_option("--seed", seed_token, "Seed for randomized oracle steps");

    Args args;
    CommandResult result;
    std::function<void()> action;

    auto sub = [&](const char* name, const char* help, std::function<void()> fn) {
        CLI::App* cmd = app.add_subcommand(name, help);
        cmd->callback([&result, &action, name, fn] {
            result.command = name;
            action = fn;
        });
        return cmd;
    };
    auto opt = [](CLI::App* cmd, const char* flag, std::string& slot, const char* help, bool required = true) {
        auto* o = cmd->add_option(flag, slot, help);
        if (required)
            o->required();
    };
    auto pos = [](CLI::App* cmd, const char* name, std::string& slot, const char* help) {
        cmd->add_option(name, slot, help)->required();
    };

    {
        auto* c = sub("expand", "i-binomial expansion of N", [&] {
            const BigInt n = parse_bigint(args.n);
            const std::int64_t i = need(args.base, "--base");
            result.inputs = {{"n", bigint_json(n)}, {"base", i}};
            result.outputs = expansion_json(macaulay_expand(n, i));
        });
        pos(c, "N", args.n, "non-negative integer");
        opt(c, "--base", args.base, "base index i >= 1");
    }
    {
        auto* c = sub("shift", "((N)_(I))^B_A", [&] {
            const BigInt n = parse_bigint(args.n);
            const std::int64_t i = need(args.base, "--base");
            const std::int64_t a = need(args.a, "--a");
            const std::int64_t b = need(args.b, "--b");
            result.inputs = {{"n", bigint_json(n)}, {"base", i}, {"a", a}, {"b", b}};
            result.outputs = {{"result", bigint_json(shift(macaulay_expand(n, i), a, b))}};
        });
        pos(c, "N", args.n, "non-negative integer");
        opt(c, "--base", args.base, "base index");
        opt(c, "--a", args.a, "bottom shift");
        opt(c, "--b", args.b, "top shift");
    }
    {
        auto* c = sub("growth", "Macaulay growth bound", [&] {
            const BigInt n = parse_bigint(args.n);
            const std::int64_t d = need(args.deg, "--deg");
            result.inputs = {{"n", bigint_json(n)}, {"deg", d}};
            result.outputs = {{"result", bigint_json(macaulay_growth(n, d))}};
        });
        pos(c, "N", args.n, "h_d");
        opt(c, "--deg", args.deg, "degree d >= 1");
    }
    {
        auto* c = sub("green", "Green restriction bound", [&] {
            const BigInt n = parse_bigint(args.n);
            const std::int64_t d = need(args.deg, "--deg");
            result.inputs = {{"n", bigint_json(n)}, {"deg", d}};
            result.outputs = {{"result", bigint_json(green_restriction(n, d))}};
        });
        pos(c, "N", args.n, "h_d");
        opt(c, "--deg", args.deg, "degree d >= 1");
    }
    {
        auto* c = sub("bound", "Gorenstein step lower bound for h_{i+1}", [&] {
            const BigInt h = parse_bigint(args.n);
            const std::int64_t e = need(args.e, "--e");
            const std::int64_t i = need(args.i, "--i");
            result.inputs = {{"h", bigint_json(h)}, {"e", e}, {"i", i}};
            result.outputs = {{"result", bigint_json(step_lower(h, e, i))}};
        });
        pos(c, "H", args.n, "h_i");
        opt(c, "--e", args.e, "socle degree");
        opt(c, "--i", args.i, "degree i");
    }
    {
        auto* c = sub("envelope", "iterated lower envelope in degrees 0..e/2", [&] {
            const std::int64_t r = need(args.n, "R");
            const std::int64_t e = need(args.e, "--e");
            result.inputs = {{"r", r}, {"e", e}};
            const EnvelopeResult env = envelope_lower(r, e);
            Json rows = Json::array();
            for (std::size_t d = 0; d < env.lower.size(); ++d)
                rows.push_back(Json{{"degree", d},
                                    {"lower", bigint_json(env.lower[d])},
                                    {"closed_form", bigint_json(env.closed_form[d])},
                                    {"g1", bigint_json(env.g1[d])}});
            result.outputs = {{"lower", bigints_json(env.lower)},
                              {"closed_form", bigints_json(env.closed_form)},
                              {"g1", bigints_json(env.g1)},
                              {"rows", rows}};
        });
        pos(c, "R", args.n, "codimension r");
        opt(c, "--e", args.e, "socle degree");
    }
    {
        auto* c = sub("mid", "closed-form lower bound for the middle entry", [&] {
            const std::int64_t r = need(args.n, "R");
            const std::int64_t e = need(args.e, "--e");
            result.inputs = {{"r", r}, {"e", e}};
            result.outputs = {{"result", bigint_json(mid_lower(r, e))}};
        });
        pos(c, "R", args.n, "codimension r");
        opt(c, "--e", args.e, "even socle degree");
    }
    {
        auto* c = sub("threshold", "unimodality threshold (i+3)(2e-3i)/2", [&] {
            const std::int64_t e = need(args.e, "--e");
            const std::int64_t i = need(args.i, "--i");
            result.inputs = {{"e", e}, {"i", i}};
            result.outputs = {{"result", bigint_json(unimodality_threshold(e, i))}};
        });
        opt(c, "--e", args.e, "socle degree");
        opt(c, "--i", args.i, "degree i");
    }
    {
        auto* c = sub("e0", "socle degree bound for unimodality through degree i+1", [&] {
            const std::int64_t r = need(args.r, "--r");
            const std::int64_t i = need(args.i, "--i");
            result.inputs = {{"r", r}, {"i", i}};
            result.outputs = rational_json(e0_bound(r, i));
        });
        opt(c, "--r", args.r, "codimension");
        opt(c, "--i", args.i, "degree i");
    }
    {
        auto* c = sub("codim3-cert", "codimension-3 unimodality certificate", [&] {
            const std::int64_t emax = need(args.emax, "--emax");
            result.inputs = {{"emax", emax}};
            const Codim3Report rep = codim3_unimodality_certificate(emax);
            Json rows = Json::array();
            for (const Codim3Row& row : rep.rows)
                rows.push_back(Json{{"e", row.e}, {"rhs", to_string(row.rhs)}, {"pass", row.pass}});
            result.outputs = {{"all_pass", rep.all_pass()}, {"rows", rows}};
        });
        opt(c, "--emax", args.emax, "largest socle degree");
    }
    {
        auto* c = sub("decompose", "r = m + C(m+e-3, e-1) + sum C(a_j, j)", [&] {
            const std::int64_t r = need(args.n, "R");
            const std::int64_t e = need(args.e, "--e");
            result.inputs = {{"r", r}, {"e", e}};
            const RDecomposition dec = decompose_r(r, e);
            result.outputs = {{"m", dec.m}, {"a", bigints_json(dec.a)}, {"exact_case", dec.exact_case()}};
        });
        pos(c, "R", args.n, "codimension r");
        opt(c, "--e", args.e, "socle degree");
    }
    {
        auto* c = sub("construct", "explicit Gorenstein h-vector candidate", [&] {
            const std::int64_t r = need(args.n, "R");
            const std::int64_t e = need(args.e, "--e");
            result.inputs = {{"r", r}, {"e", e}};
            if (r == 1 && e >= 1) {
                result.outputs = {{"hvector", bigints_json(std::vector<BigInt>(e + 1, 1))},
                                  {"exact_case", false},
                                  {"plus_one_applied", false}};
                result.warnings.push_back("codimension 1: the only Gorenstein h-vector is all ones");
                return;
            }
            const GorensteinCandidate cand = gorenstein_candidate(r, e);
            result.outputs = {{"hvector", hvector_json(cand.hvector)},
                              {"exact_case", cand.exact_case},
                              {"plus_one_applied", cand.plus_one_applied},
                              {"m", cand.decomposition.m},
                              {"level_part", bigints_json(cand.level_part)}};
            result.warnings = cand.warnings;
        });
        pos(c, "R", args.n, "codimension r");
        opt(c, "--e", args.e, "socle degree");
    }
    {
        auto* c = sub("check-oseq", "Macaulay O-sequence test", [&] {
            const HVector h = parse_hvector(args.hvec);
            result.inputs = {{"h", hvector_json(h)}};
            result.outputs = {{"result", osequence_check(h)}};
        });
        pos(c, "H", args.hvec, "comma-separated entries or @file");
    }
    {
        auto* c = sub("check-si", "SI-sequence test", [&] {
            const HVector h = parse_hvector(args.hvec);
            result.inputs = {{"h", hvector_json(h)}};
            result.outputs = {{"result", si_sequence_check(h)}};
        });
        pos(c, "H", args.hvec, "comma-separated entries or @file");
    }
    {
        auto* c = sub("lex-growth", "growth of a lex ideal, counted monomial by monomial", [&] {
            const std::int64_t h = need(args.n, "H");
            const std::int64_t d = need(args.deg, "--deg");
            const std::int64_t n = need(args.vars, "--vars");
            result.inputs = {{"h", h}, {"deg", d}, {"vars", n}};
            result.outputs = {{"result", oracle::lex_growth(h, static_cast<int>(d), static_cast<int>(n))}};
        });
        pos(c, "H", args.n, "h_d");
        opt(c, "--deg", args.deg, "degree d");
        opt(c, "--vars", args.vars, "number of variables");
    }
    {
        auto* c = sub("lex-level", "level test of the lex ideal with Hilbert function H", [&] {
            const HVector h = parse_hvector(args.hvec);
            const std::int64_t n = need(args.vars, "--vars");
            result.inputs = {{"h", hvector_json(h)}, {"vars", n}};
            result.outputs = {{"result", oracle::lex_level_check(to_machine(h), static_cast<int>(n))}};
        });
        pos(c, "H", args.hvec, "comma-separated entries or @file");
        opt(c, "--vars", args.vars, "number of variables");
    }
    {
        auto* c = sub("catalecticant", "Hilbert function of the apolar algebra of a dual form", [&] {
            const std::uint32_t p = args.prime.empty()
                                        ? default_prime()
                                        : static_cast<std::uint32_t>(need(args.prime, "--prime"));
            const oracle::DualForm form = [&] {
                try {
                    return nlohmann::json::parse(read_file(args.form)).get<oracle::DualForm>();
                } catch (const nlohmann::json::exception& ex) {
                    throw PreconditionError("malformed dual form file: " + std::string(ex.what()));
                }
            }();
            result.inputs = {{"form", args.form}, {"prime", p}};
            const HVector h = oracle::catalecticant_hilbert(form, p);
            result.outputs = {{"hvector", hvector_json(h)},
                              {"kernel", std::string(kernels::isa_name(kernels::active_isa()))}};
        });
        opt(c, "--form", args.form, "dual form JSON file");
        opt(c, "--prime", args.prime, "prime modulus (default GHK_PRIME or 32003)", false);
    }
    {
        auto* c = sub("compressed", "compressed (maximal) Gorenstein h-vector", [&] {
            const std::int64_t r = need(args.r, "--r");
            const std::int64_t e = need(args.e, "--e");
            result.inputs = {{"r", r}, {"e", e}};
            result.outputs = {{"hvector", hvector_json(oracle::compressed_hvector(r, e))}};
        });
        opt(c, "--r", args.r, "codimension");
        opt(c, "--e", args.e, "socle degree");
    }
    {
        auto* c = sub("limit", "limiting constant of f_{e,i}(r) / r^{(e-i)/(e-1)}", [&] {
            const std::int64_t e = need(args.e, "--e");
            const std::int64_t i = need(args.i, "--i");
            result.inputs = {{"e", e}, {"i", i}};
            result.outputs = {{"result", to_string(limit_value(e, i))},
                              {"exponent", to_string(Rational(e - i, e - 1))}};
        });
        opt(c, "--e", args.e, "socle degree");
        opt(c, "--i", args.i, "degree i <= e/2");
    }
    {
        auto* c = sub("table", "convergence table of the normalized sandwich", [&] {
            const std::int64_t e = need(args.e, "--e");
            const std::int64_t i = need(args.i, "--i");
            const std::int64_t rmax = need(args.rmax, "--rmax");
            const std::int64_t k = need(args.per_decade, "--per-decade");
            const unsigned jobs = args.jobs.empty()
                                      ? default_jobs()
                                      : static_cast<unsigned>(std::max<std::int64_t>(1, need(args.jobs, "--jobs")));
            // Job count does not affect results, so it stays out of the inputs record.
            result.inputs = {{"e", e}, {"i", i}, {"rmax", rmax}, {"per_decade", k}};
            const ConvergenceReport rep = convergence_report(e, i, rmax, k, jobs);
            Json rows = Json::array();
            for (const RatioRow& row : rep.rows)
                rows.push_back(ratio_row_json(row));
            result.outputs = {{"rows", rows},
                              {"sandwiched", rep.sandwiched()},
                              {"trend_decreasing", rep.trend_decreasing()},
                              {"first_decade_gap_g", to_string(rep.first_decade_gap_g)},
                              {"first_decade_gap_h", to_string(rep.first_decade_gap_h)},
                              {"last_decade_gap_g", to_string(rep.last_decade_gap_g)},
                              {"last_decade_gap_h", to_string(rep.last_decade_gap_h)}};
            result.warnings = rep.errors;
            result.ratio_rows = rep.rows;
            result.has_ratio_rows = true;
        });
        opt(c, "--e", args.e, "socle degree");
        opt(c, "--i", args.i, "degree i <= e/2");
        opt(c, "--rmax", args.rmax, "largest codimension sampled");
        opt(c, "--per-decade", args.per_decade, "samples per decade");
        opt(c, "--jobs", args.jobs, "worker threads (default GHK_JOBS or hardware)", false);
    }
    {
        auto* c = sub("kleinschmidt", "middle-degree exponent identity for 3 <= e <= emax", [&] {
            const std::int64_t emax = need(args.emax, "--emax");
            if (emax < 3)
                throw PreconditionError("kleinschmidt: --emax must be >= 3");
            result.inputs = {{"emax", emax}};
            Json failures = Json::array();
            for (std::int64_t e = 3; e <= emax; ++e)
                if (!kleinschmidt_consistency(e))
                    failures.push_back(e);
            result.outputs = {{"all_pass", failures.empty()}, {"checked", emax - 2}, {"failures", failures}};
        });
        opt(c, "--emax", args.emax, "largest socle degree");
    }
    {
        auto* c = sub("realize", "realize a candidate by a trivial-extension dual form", [&] {
            const std::int64_t r = need(args.n, "R");
            const std::int64_t e = need(args.e, "--e");
            const std::uint32_t p = args.prime.empty()
                                        ? default_prime()
                                        : static_cast<std::uint32_t>(need(args.prime, "--prime"));
            const auto seed = static_cast<std::uint64_t>(parse_int(seed_token));
            result.inputs = {{"r", r}, {"e", e}, {"prime", p}, {"seed", seed}};
            const oracle::RealizationReport rep = oracle::realize_candidate(r, e, p, seed);
            result.outputs = {{"expected", hvector_json(rep.expected)},
                              {"measured", hvector_json(rep.measured)},
                              {"matched", rep.matched},
                              {"lex_level", rep.lex_level},
                              {"retried", rep.retried},
                              {"exact_case", rep.exact_case}};
            if (rep.retried) {
                result.outputs["measured_random"] = hvector_json(rep.measured_random);
                result.outputs["matched_random"] = rep.matched_random;
            }
            if (rep.exact_case)
                result.warnings.push_back("exact case: measured vector precedes the +1 adjustment");
        });
        pos(c, "R", args.n, "codimension r");
        opt(c, "--e", args.e, "socle degree");
        opt(c, "--prime", args.prime, "prime modulus", false);
    }

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    if (!reversed.empty())
        reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << '\n' << app.help();
        return kUsageError;
    }

    try {
        parse_int(seed_token);
        action();
        emit(result, format, out);
        return kOk;
    } catch (const PreconditionError& ex) {
        err << "error: " << ex.what() << '\n';
        return kUsageError;
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << '\n';
        return kInternalError;
    }
}

}  // namespace ghk::cli
