#include "ghk/numeric.hpp"

#include <limits>
#include <sstream>

namespace ghk {

BigInt parse_bigint(std::string_view token)
{
    std::size_t pos = 0;
    if (!token.empty() && token[0] == '-')
        pos = 1;
    if (pos == token.size())
        throw PreconditionError("malformed integer '" + std::string(token) + "'");
    for (std::size_t k = pos; k < token.size(); ++k) {
        if (token[k] < '0' || token[k] > '9')
            throw PreconditionError("malformed integer '" + std::string(token) + "'");
    }
    return BigInt(std::string(token));
}

std::int64_t parse_int(std::string_view token)
{
    BigInt value = parse_bigint(token);
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min())
        throw PreconditionError("integer out of range '" + std::string(token) + "'");
    return value.convert_to<std::int64_t>();
}

std::string to_string(const BigInt& value)
{
    return value.str();
}

std::string to_string(const Rational& value)
{
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

std::string to_string(const Real& value, int digits)
{
    std::ostringstream out;
    out.precision(digits);
    out << value;
    return out.str();
}

std::int64_t to_int64(const BigInt& value)
{
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min())
        throw PreconditionError("value " + value.str() + " does not fit in 64 bits");
    return value.convert_to<std::int64_t>();
}

}  // namespace ghk
