#include "ghk/oracle/monomials.hpp"

#include <numeric>
#include <set>

namespace ghk::oracle {

namespace {

void fill(int var, int remaining, Exponent& current, std::vector<Exponent>& out)
{
    const int n = static_cast<int>(current.size());
    if (var == n - 1) {
        current[var] = remaining;
        out.push_back(current);
        current[var] = 0;
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        current[var] = k;
        fill(var + 1, remaining - k, current, out);
    }
    current[var] = 0;
}

}  // namespace

std::vector<Exponent> monomials_lex(int num_vars, int degree)
{
    std::vector<Exponent> out;
    if (num_vars <= 0 || degree < 0)
        return out;
    Exponent current(num_vars, 0);
    fill(0, degree, current, out);
    return out;
}

std::int64_t monomial_count(int num_vars, int degree)
{
    if (num_vars <= 0 || degree < 0)
        return degree == 0 && num_vars == 0 ? 1 : 0;
    // C(n + d - 1, d) by the running product.
    std::int64_t result = 1;
    for (int j = 1; j <= degree; ++j)
        result = result * (num_vars - 1 + j) / j;
    return result;
}

bool MonomialSet::valid() const
{
    std::set<Exponent> seen;
    for (const Exponent& x : exponents) {
        if (static_cast<int>(x.size()) != num_vars)
            return false;
        int sum = 0;
        for (int v : x) {
            if (v < 0)
                return false;
            sum += v;
        }
        if (sum != degree || !seen.insert(x).second)
            return false;
    }
    return true;
}

std::map<Exponent, std::size_t> monomial_index(int num_vars, int degree)
{
    std::map<Exponent, std::size_t> index;
    std::size_t k = 0;
    for (Exponent& x : monomials_lex(num_vars, degree))
        index.emplace(std::move(x), k++);
    return index;
}

}  // namespace ghk::oracle
