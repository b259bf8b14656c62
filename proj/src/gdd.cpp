#include "hsd/gdd.hpp"

#include "hsd/errors.hpp"
#include "text_format.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace hsd {

TypeSpec Gdd::type() const
{
    std::vector<std::uint32_t> sizes;
    for (const auto& g : groups) sizes.push_back(static_cast<std::uint32_t>(g.size()));
    return TypeSpec::from_sizes(sizes);
}

std::set<std::size_t> Gdd::block_sizes() const
{
    std::set<std::size_t> out;
    for (const auto& b : blocks) out.insert(b.size());
    return out;
}

std::string GddViolation::to_string() const
{
    std::ostringstream out;
    switch (kind) {
    case Kind::GroupOverlap: out << "group-overlap point " << p.to_string(); break;
    case Kind::PointNotInGroup: out << "point-not-in-group " << p.to_string(); break;
    case Kind::UnknownPoint: out << "unknown-point " << p.to_string() << " in block " << block; break;
    case Kind::BlockMeetsGroupTwice:
        out << "block " << block << " meets a group twice at " << p.to_string() << "," << q.to_string();
        break;
    case Kind::PairCount: out << "pair {" << p.to_string() << "," << q.to_string() << "} count " << count; break;
    }
    return out.str();
}

std::string GddReport::summary() const
{
    std::ostringstream out;
    out << (pass ? "PASS" : "FAIL");
    if (!pass) {
        out << ", " << violation_count << " violations";
        if (!violations.empty()) out << "; first: " << violations.front().to_string();
    }
    return out.str();
}

GddReport verify_gdd(const Gdd& g)
{
    GddReport r;
    auto add = [&](GddViolation v) {
        ++r.violation_count;
        if (r.violations.size() < 2000) r.violations.push_back(v);
    };
    const auto n = g.space.size();
    std::vector<std::int32_t> group(n, -1);
    for (std::size_t gi = 0; gi < g.groups.size(); ++gi)
        for (Point p : g.groups[gi]) {
            if (!g.space.contains(p)) {
                add({GddViolation::Kind::UnknownPoint, p, p, 0, 0});
                continue;
            }
            auto& slot = group[g.space.dense(p)];
            if (slot != -1) add({GddViolation::Kind::GroupOverlap, p, p, 0, 0});
            slot = static_cast<std::int32_t>(gi);
        }
    for (std::size_t i = 0; i < n; ++i)
        if (group[i] == -1) add({GddViolation::Kind::PointNotInGroup, g.space.point(i), {}, 0, 0});

    std::vector<std::uint32_t> count(n * n, 0);
    for (std::size_t bi = 0; bi < g.blocks.size(); ++bi) {
        const auto& b = g.blocks[bi];
        bool ok = true;
        for (Point p : b)
            if (!g.space.contains(p)) {
                add({GddViolation::Kind::UnknownPoint, p, p, bi, 0});
                ok = false;
            }
        if (!ok) continue;
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                auto x = g.space.dense(b[i]), y = g.space.dense(b[j]);
                if (x == y || (group[x] >= 0 && group[x] == group[y]))
                    add({GddViolation::Kind::BlockMeetsGroupTwice, b[i], b[j], bi, 0});
                else
                    ++count[std::min(x, y) * n + std::max(x, y)];
            }
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            if (group[x] < 0 || group[y] < 0 || group[x] == group[y]) continue;
            if (count[x * n + y] != g.lambda)
                add({GddViolation::Kind::PairCount, g.space.point(x), g.space.point(y), 0, count[x * n + y]});
        }
    r.pass = r.violation_count == 0;
    return r;
}

TransversalDesign td_from_mols(const MOLSSet& ms)
{
    const auto m = ms.order;
    const auto k = static_cast<std::uint32_t>(ms.squares.size() + 2);
    TransversalDesign td{k, m, {}};
    td.gdd.space = PointSpace{k * m, 0};
    for (std::uint32_t i = 0; i < k; ++i) {
        std::vector<Point> grp;
        for (std::uint32_t x = 0; x < m; ++x) grp.push_back(Point::finite(i * m + x));
        td.gdd.groups.push_back(std::move(grp));
    }
    for (std::uint32_t x = 0; x < m; ++x)
        for (std::uint32_t y = 0; y < m; ++y) {
            std::vector<Point> b{Point::finite(x), Point::finite(m + y)};
            for (std::uint32_t s = 0; s < ms.squares.size(); ++s)
                b.push_back(Point::finite((s + 2) * m + ms.squares[s].at(x, y)));
            td.gdd.blocks.push_back(std::move(b));
        }
    return td;
}

bool td_exists(std::uint32_t k, std::uint32_t m)
{
    if (m == 0) return false;
    if (k <= 3 || m == 1) return true;
    if (is_prime_power(m) && k <= m + 1) return true;
    if (k <= 6 && m >= 5 && m != 6 && m != 10 && m != 14 && m != 18 && m != 22) return true;
    return false;
}

Gdd read_gdd(std::istream& in)
{
    auto lines = detail::read_lines(in, "gdd v1");
    Gdd g;
    std::optional<TypeSpec> type;
    std::optional<std::uint64_t> points, lambda;
    std::uint32_t max_finite = 0, max_label = 0;
    bool any_finite = false;
    for (const auto& l : lines) {
        if (l.key == "type") {
            try {
                type = TypeSpec::parse(l.value);
            }
            catch (const ParseError& e) {
                throw ParseError(e.what(), l.number, e.offset());
            }
        }
        else if (l.key == "points")
            points = detail::parse_uint(l.value, l.number);
        else if (l.key == "lambda") {
            lambda = detail::parse_uint(l.value, l.number);
            if (*lambda == 0) throw ParseError("lambda must be positive", l.number);
        }
        else if (l.key == "group") {
            auto pts = detail::parse_points(l.value, l.number);
            if (pts.empty()) throw ParseError("empty group", l.number);
            for (Point p : pts) {
                if (p.is_finite()) {
                    max_finite = std::max(max_finite, p.index());
                    any_finite = true;
                }
                else
                    max_label = std::max(max_label, p.label());
            }
            g.groups.push_back(std::move(pts));
        }
        else if (l.key == "block") {
            auto pts = detail::parse_points(l.value, l.number);
            if (pts.size() < 2) throw ParseError("a block needs at least 2 points", l.number);
            g.blocks.push_back(std::move(pts));
        }
        else
            throw ParseError("unknown header '" + l.key + "'", l.number);
    }
    if (!type || !points || !lambda) throw ParseError("missing type, points or lambda line");
    g.lambda = static_cast<std::uint32_t>(*lambda);
    g.space = PointSpace{any_finite ? max_finite + 1 : 0, max_label};
    if (*points != g.space.size()) throw ParseError("points line disagrees with groups");
    if (!(g.type() == *type)) throw ParseError("type line disagrees with groups");
    return g;
}

Gdd parse_gdd(const std::string& text)
{
    std::istringstream in(text);
    return read_gdd(in);
}

Gdd load_gdd(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_gdd(in);
}

void write_gdd(std::ostream& out, const Gdd& g)
{
    out << "gdd v1\n";
    out << "type: " << g.type().to_string() << "\n";
    out << "points: " << g.space.size() << "\n";
    out << "lambda: " << g.lambda << "\n";
    for (const auto& grp : g.groups) {
        out << "group:";
        for (Point p : grp) out << ' ' << p.to_string();
        out << "\n";
    }
    for (const auto& b : g.blocks) {
        out << "block:";
        for (Point p : b) out << ' ' << p.to_string();
        out << "\n";
    }
}

std::string format_gdd(const Gdd& g)
{
    std::ostringstream out;
    write_gdd(out, g);
    return out.str();
}

} // namespace hsd
