#include "hsd/type_spec.hpp"

#include "hsd/errors.hpp"

#include <algorithm>
#include <map>

namespace hsd {

TypeSpec::TypeSpec(std::vector<TypePart> parts) : parts_(std::move(parts))
{
    for (const auto& p : parts_)
        if (p.size == 0 || p.count == 0) throw ParseError("type parts must have positive size and count");
}

TypeSpec TypeSpec::parse(std::string_view text)
{
    std::vector<TypePart> parts;
    std::size_t i = 0;
    auto number = [&](const char* what) -> std::uint32_t {
        std::size_t start = i;
        std::uint64_t v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
            if (v > 1'000'000'000) throw ParseError(std::string(what) + " too large", 0, start);
            ++i;
        }
        if (i == start) throw ParseError(std::string("expected ") + what, 0, start);
        return static_cast<std::uint32_t>(v);
    };
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        std::size_t start = i;
        std::uint32_t size = number("hole size");
        if (i >= text.size() || text[i] != '^') throw ParseError("expected '^'", 0, i);
        ++i;
        std::uint32_t count = number("hole count");
        if (size == 0 || count == 0) throw ParseError("zero size or count in type", 0, start);
        parts.push_back({size, count});
        if (i < text.size() && text[i] != ' ' && text[i] != '\t') throw ParseError("expected whitespace", 0, i);
        skip_ws();
    }
    if (parts.empty()) throw ParseError("empty type");
    return TypeSpec(std::move(parts));
}

TypeSpec TypeSpec::from_sizes(const std::vector<std::uint32_t>& sizes)
{
    std::vector<TypePart> parts;
    for (auto s : sizes)
        if (s != 0) parts.push_back({s, 1});
    return TypeSpec(std::move(parts)).normalized();
}

std::uint64_t TypeSpec::point_count() const
{
    std::uint64_t p = 0;
    for (const auto& part : parts_) p += std::uint64_t{part.size} * part.count;
    return p;
}

std::uint64_t TypeSpec::hole_count() const
{
    std::uint64_t c = 0;
    for (const auto& part : parts_) c += part.count;
    return c;
}

std::vector<std::uint32_t> TypeSpec::sizes() const
{
    std::vector<std::uint32_t> out;
    for (const auto& part : parts_) out.insert(out.end(), part.count, part.size);
    return out;
}

std::uint64_t TypeSpec::cross_pair_count() const
{
    std::uint64_t p = point_count();
    std::uint64_t total = p * (p - (p > 0 ? 1 : 0)) / 2;
    for (const auto& part : parts_) total -= std::uint64_t{part.count} * part.size * (part.size - 1) / 2;
    return total;
}

TypeSpec TypeSpec::normalized() const
{
    std::map<std::uint32_t, std::uint32_t> merged;
    for (const auto& part : parts_) merged[part.size] += part.count;
    std::vector<TypePart> out;
    for (auto [s, c] : merged) out.push_back({s, c});
    std::stable_sort(out.begin(), out.end(), [](const TypePart& a, const TypePart& b) {
        return a.count != b.count ? a.count > b.count : a.size < b.size;
    });
    TypeSpec t;
    t.parts_ = std::move(out);
    return t;
}

std::string TypeSpec::to_string() const
{
    std::string out;
    for (const auto& part : parts_) {
        if (!out.empty()) out += ' ';
        out += std::to_string(part.size) + "^" + std::to_string(part.count);
    }
    return out;
}

bool TypeSpec::operator==(const TypeSpec& other) const { return normalized().parts_ == other.normalized().parts_; }

bool TypeSpec::operator<(const TypeSpec& other) const
{
    auto a = normalized(), b = other.normalized();
    return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
                                        [](const TypePart& x, const TypePart& y) {
                                            return x.size != y.size ? x.size < y.size : x.count < y.count;
                                        });
}

std::uint64_t expected_block_count(const TypeSpec& t)
{
    auto cross = t.cross_pair_count();
    if (cross % 2 != 0)
        throw InfeasibleTypeError("type " + t.to_string() + " has " + std::to_string(cross) +
                                  " cross-hole pairs; block count would not be an integer");
    return cross / 2;
}

} // namespace hsd
