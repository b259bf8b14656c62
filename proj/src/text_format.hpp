#pragma once

// Line reader shared by the design, starter and GDD formats.

#include "hsd/errors.hpp"
#include "hsd/point.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace hsd::detail {

struct Line {
    std::size_t number = 0;
    std::string key;                 // text before ':' (empty for the header line)
    std::string value;               // trimmed text after ':'
};

std::string_view trim(std::string_view s);
std::vector<std::string> split_ws(std::string_view s);

/// Reads non-empty, comment-stripped lines; the first must equal `header`.
std::vector<Line> read_lines(std::istream& in, std::string_view header);

std::uint64_t parse_uint(std::string_view s, std::size_t line);
std::vector<Point> parse_points(std::string_view s, std::size_t line);

} // namespace hsd::detail
