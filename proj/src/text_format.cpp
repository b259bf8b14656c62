#include "text_format.hpp"

#include <charconv>

namespace hsd::detail {

std::string_view trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ',')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != ',') ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::vector<Line> read_lines(std::istream& in, std::string_view header)
{
    std::vector<Line> out;
    std::string raw;
    std::size_t number = 0;
    bool saw_header = false;
    while (std::getline(in, raw)) {
        ++number;
        std::string_view s = raw;
        if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        if (!saw_header) {
            if (s != header)
                throw ParseError("expected header '" + std::string(header) + "', got '" + std::string(s) + "'", number);
            saw_header = true;
            continue;
        }
        auto colon = s.find(':');
        if (colon == std::string_view::npos) throw ParseError("expected 'key: value'", number);
        Line l;
        l.number = number;
        l.key = std::string(trim(s.substr(0, colon)));
        l.value = std::string(trim(s.substr(colon + 1)));
        out.push_back(std::move(l));
    }
    if (!saw_header) throw ParseError("empty input, expected header '" + std::string(header) + "'");
    return out;
}

std::uint64_t parse_uint(std::string_view s, std::size_t line)
{
    s = trim(s);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError("expected a non-negative integer, got '" + std::string(s) + "'", line);
    return v;
}

std::vector<Point> parse_points(std::string_view s, std::size_t line)
{
    std::vector<Point> out;
    for (const auto& tok : split_ws(s)) {
        try {
            out.push_back(Point::parse(tok));
        }
        catch (const ParseError& e) {
            throw ParseError(e.what(), line);
        }
    }
    return out;
}

} // namespace hsd::detail
