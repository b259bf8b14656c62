#include "hsd/design.hpp"

#include "hsd/errors.hpp"
#include "text_format.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace hsd {

std::vector<std::uint32_t> HoleStructure::sizes() const
{
    std::vector<std::uint32_t> out;
    out.reserve(holes.size());
    for (const auto& h : holes) out.push_back(static_cast<std::uint32_t>(h.size()));
    return out;
}

TypeSpec HoleStructure::type() const { return TypeSpec::from_sizes(sizes()); }

std::vector<std::int32_t> Design::hole_index() const
{
    std::vector<std::int32_t> idx(space.size(), -1);
    for (std::size_t h = 0; h < holes.holes.size(); ++h)
        for (Point p : holes.holes[h]) {
            if (!space.contains(p)) continue;
            auto& slot = idx[space.dense(p)];
            slot = slot == -1 ? static_cast<std::int32_t>(h) : -2;
        }
    return idx;
}

void Design::canonicalize()
{
    for (auto& b : blocks) b = b.canonical();
    std::sort(blocks.begin(), blocks.end());
}

Design empty_design(const TypeSpec& t)
{
    Design d;
    d.declared_type = t;
    d.space = PointSpace{static_cast<std::uint32_t>(t.point_count()), 0};
    std::uint32_t next = 0;
    for (auto s : t.sizes()) {
        std::vector<Point> hole;
        for (std::uint32_t i = 0; i < s; ++i) hole.push_back(Point::finite(next++));
        d.holes.holes.push_back(std::move(hole));
    }
    return d;
}

Design read_design(std::istream& in)
{
    auto lines = detail::read_lines(in, "hsd-design v1");
    Design d;
    bool have_type = false;
    std::optional<std::uint64_t> declared_points;
    std::size_t points_line = 0;
    std::uint32_t max_finite = 0, max_label = 0;
    bool any_finite = false;
    for (const auto& l : lines) {
        if (l.key == "type") {
            if (have_type) throw ParseError("duplicate type line", l.number);
            try {
                d.declared_type = TypeSpec::parse(l.value);
            }
            catch (const ParseError& e) {
                throw ParseError(e.what(), l.number, e.offset());
            }
            have_type = true;
        }
        else if (l.key == "points") {
            if (declared_points) throw ParseError("duplicate points line", l.number);
            declared_points = detail::parse_uint(l.value, l.number);
            points_line = l.number;
        }
        else if (l.key == "hole") {
            auto pts = detail::parse_points(l.value, l.number);
            if (pts.empty()) throw ParseError("empty hole", l.number);
            for (Point p : pts) {
                if (p.is_finite()) {
                    max_finite = std::max(max_finite, p.index());
                    any_finite = true;
                }
                else
                    max_label = std::max(max_label, p.label());
            }
            d.holes.holes.push_back(std::move(pts));
        }
        else if (l.key == "block") {
            auto pts = detail::parse_points(l.value, l.number);
            if (pts.size() != 4) throw ParseError("a block needs exactly 4 points", l.number);
            d.blocks.push_back(make_block(pts[0], pts[1], pts[2], pts[3]));
        }
        else
            throw ParseError("unknown header '" + l.key + "'", l.number);
    }
    if (!have_type) throw ParseError("missing type line");
    if (!declared_points) throw ParseError("missing points line");
    d.space = PointSpace{any_finite ? max_finite + 1 : 0, max_label};
    if (*declared_points != d.space.size())
        throw ParseError("points: " + std::to_string(*declared_points) + " but holes span " +
                             std::to_string(d.space.size()) + " points",
                         points_line);
    return d;
}

Design parse_design(const std::string& text)
{
    std::istringstream in(text);
    return read_design(in);
}

Design read_design_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_design(in);
}

void write_design(std::ostream& out, const Design& d)
{
    out << "hsd-design v1\n";
    out << "type: " << d.declared_type.to_string() << "\n";
    out << "points: " << d.space.size() << "\n";
    for (const auto& h : d.holes.holes) {
        out << "hole:";
        for (Point p : h) out << ' ' << p.to_string();
        out << "\n";
    }
    for (const auto& b : d.blocks)
        out << "block: " << b[0].to_string() << ' ' << b[1].to_string() << ' ' << b[2].to_string() << ' '
            << b[3].to_string() << "\n";
}

std::string format_design(const Design& d)
{
    std::ostringstream out;
    write_design(out, d);
    return out.str();
}

} // namespace hsd
