#include "hsd/point.hpp"

#include "hsd/errors.hpp"

#include <charconv>

namespace hsd {

std::string Point::to_string() const
{
    return is_finite() ? std::to_string(index()) : "x" + std::to_string(label());
}

Point Point::parse(std::string_view token)
{
    bool inf = !token.empty() && token.front() == 'x';
    std::string_view digits = inf ? token.substr(1) : token;
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || v >= 0x80000000u)
        throw ParseError("bad point token '" + std::string(token) + "'");
    if (inf && v == 0) throw ParseError("infinite labels start at 1: '" + std::string(token) + "'");
    return inf ? infinite(v) : finite(v);
}

} // namespace hsd
