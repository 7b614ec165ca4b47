#include "ghk/json_io.hpp"

namespace ghk {

nlohmann::ordered_json bigint_json(const BigInt& value)
{
    if (boost::multiprecision::abs(value) <= kJsonSafeInteger)
        return value.convert_to<std::int64_t>();
    return value.str();
}

nlohmann::ordered_json bigints_json(const std::vector<BigInt>& values)
{
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const BigInt& v : values)
        out.push_back(bigint_json(v));
    return out;
}

}  // namespace ghk
