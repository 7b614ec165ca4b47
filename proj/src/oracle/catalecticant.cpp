#include "ghk/oracle/catalecticant.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ghk/binomial.hpp"

namespace ghk::oracle {

bool DualForm::valid() const
{
    if (num_vars < 1 || degree < 1)
        return false;
    for (const auto& [x, c] : terms) {
        if (static_cast<int>(x.size()) != num_vars || c == 0)
            return false;
        int sum = 0;
        for (int v : x) {
            if (v < 0)
                return false;
            sum += v;
        }
        if (sum != degree)
            return false;
    }
    return true;
}

void to_json(nlohmann::json& j, const DualForm& form)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [x, c] : form.terms)
        terms.push_back(nlohmann::json::array({x, c}));
    j = nlohmann::json{{"num_vars", form.num_vars}, {"degree", form.degree}, {"terms", terms}};
}

void from_json(const nlohmann::json& j, DualForm& form)
{
    try {
        form.num_vars = j.at("num_vars").get<int>();
        form.degree = j.at("degree").get<int>();
        form.terms.clear();
        for (const nlohmann::json& t : j.at("terms")) {
            if (!t.is_array() || t.size() != 2)
                throw PreconditionError("dual form term must be [[exponents...], coeff]");
            form.terms.emplace_back(t[0].get<Exponent>(), t[1].get<std::uint64_t>());
        }
    } catch (const nlohmann::json::exception& ex) {
        throw PreconditionError(std::string("malformed dual form: ") + ex.what());
    }
    if (!form.valid())
        throw PreconditionError("dual form violates its invariants");
}

namespace {

// Calls visit(u) for every exponent u <= w (entrywise) with |u| = target.
template <typename Visit>
void for_each_divisor(const Exponent& w, int target, Visit&& visit)
{
    Exponent u(w.size(), 0);
    auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
        if (var == w.size()) {
            if (remaining == 0)
                visit(u);
            return;
        }
        const int cap = std::min(w[var], remaining);
        for (int k = cap; k >= 0; --k) {
            u[var] = k;
            self(self, var + 1, remaining - k);
        }
        u[var] = 0;
    };
    rec(rec, 0, target);
}

}  // namespace

ModMatrix catalecticant_matrix(const DualForm& form, int i, std::uint32_t p)
{
    if (i < 0 || i > form.degree)
        throw PreconditionError("catalecticant_matrix: degree out of range");
    const auto rows = monomial_index(form.num_vars, i);
    const auto cols = monomial_index(form.num_vars, form.degree - i);
    ModMatrix cat(rows.size(), cols.size());
    for (const auto& [w, coeff] : form.terms) {
        const auto c = static_cast<std::uint32_t>(coeff % p);
        if (c == 0)
            continue;
        for_each_divisor(w, i, [&](const Exponent& u) {
            Exponent v = w;
            for (std::size_t k = 0; k < v.size(); ++k)
                v[k] -= u[k];
            std::uint32_t& entry = cat.at(rows.at(u), cols.at(v));
            entry = static_cast<std::uint32_t>((std::uint64_t{entry} + c) % p);
        });
    }
    return cat;
}

HVector catalecticant_hilbert(const DualForm& form, std::uint32_t p)
{
    if (!is_prime(p))
        throw PreconditionError("catalecticant_hilbert: " + std::to_string(p) + " is not prime");
    if (p <= static_cast<std::uint32_t>(2 * form.degree))
        throw PreconditionError("catalecticant_hilbert: prime must exceed twice the degree");
    if (!form.valid())
        throw PreconditionError("catalecticant_hilbert: dual form violates its invariants");
    const bool nonzero = std::any_of(form.terms.begin(), form.terms.end(),
                                     [p](const auto& t) { return t.second % p != 0; });
    if (!nonzero)
        throw PreconditionError("catalecticant_hilbert: F is zero");

    HVector h;
    for (int i = 0; i <= form.degree; ++i) {
        if (2 * i > form.degree) {
            h.entries.push_back(h[static_cast<std::size_t>(form.degree - i)]);
            continue;
        }
        h.entries.emplace_back(rank_mod_p(catalecticant_matrix(form, i, p), p));
    }
    // Cat_{e-i} is the transpose of Cat_i; recompute the upper half once to confirm.
    for (int i = form.degree / 2 + 1; i <= form.degree; ++i) {
        const auto rank = rank_mod_p(catalecticant_matrix(form, i, p), p);
        if (BigInt(rank) != h[static_cast<std::size_t>(i)])
            throw std::logic_error("catalecticant_hilbert: asymmetric ranks at degree " +
                                   std::to_string(i));
    }
    return h;
}

HVector compressed_hvector(std::int64_t r, std::int64_t e)
{
    if (r < 1 || e < 1)
        throw PreconditionError("compressed_hvector: requires r >= 1 and e >= 1");
    HVector h;
    for (std::int64_t i = 0; i <= e; ++i)
        h.entries.push_back(std::min(binomial(BigInt(r - 1 + i), i),
                                     binomial(BigInt(r - 1 + e - i), e - i)));
    return h;
}

DualForm trivial_extension_form(const MonomialSet& level_socle,
                                const std::vector<std::uint64_t>& coefficients)
{
    if (level_socle.exponents.empty())
        throw PreconditionError("trivial_extension_form: monomial set is empty");
    if (!level_socle.valid())
        throw PreconditionError("trivial_extension_form: monomial set violates its invariants");
    const std::size_t t = level_socle.exponents.size();
    if (!coefficients.empty() && coefficients.size() != t)
        throw PreconditionError("trivial_extension_form: one coefficient per monomial required");

    DualForm form;
    form.num_vars = level_socle.num_vars + static_cast<int>(t);
    form.degree = level_socle.degree + 1;
    for (std::size_t k = 0; k < t; ++k) {
        Exponent x = level_socle.exponents[k];
        x.resize(static_cast<std::size_t>(form.num_vars), 0);
        x[static_cast<std::size_t>(level_socle.num_vars) + k] = 1;
        form.terms.emplace_back(std::move(x), coefficients.empty() ? 1 : coefficients[k]);
    }
    return form;
}

DualForm random_form(int num_vars, int degree, std::uint32_t p, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    DualForm form;
    form.num_vars = num_vars;
    form.degree = degree;
    for (Exponent& x : monomials_lex(num_vars, degree)) {
        const std::uint32_t c = coeff(rng);
        if (c != 0)
            form.terms.emplace_back(std::move(x), c);
    }
    return form;
}

}  // namespace ghk::oracle
