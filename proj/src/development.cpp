#include "hsd/development.hpp"

#include "hsd/errors.hpp"
#include "text_format.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace hsd {

TypeSpec StarterSet::type() const
{
    std::vector<TypePart> parts{{h, n}};
    if (u > 0) parts.push_back({u, 1});
    return TypeSpec(parts);
}

HoleStructure StarterSet::holes() const
{
    HoleStructure hs;
    for (std::uint32_t i = 0; i < n; ++i) {
        std::vector<Point> hole;
        for (std::uint32_t j = 0; j < h; ++j) hole.push_back(Point::finite(i + j * n));
        hs.holes.push_back(std::move(hole));
    }
    if (u > 0) {
        std::vector<Point> hole;
        for (std::uint32_t l = 1; l <= u; ++l) hole.push_back(Point::infinite(l));
        hs.holes.push_back(std::move(hole));
    }
    return hs;
}

void StarterSet::validate() const
{
    if (h == 0 || n == 0) throw InconsistencyError("starter set needs positive h and n");
    if (step == 0 || modulus() % step != 0)
        throw InconsistencyError("step " + std::to_string(step) + " does not divide modulus " +
                                 std::to_string(modulus()));
    for (std::size_t i = 0; i < starters.size(); ++i) {
        const auto& b = starters[i];
        for (Point p : b.pts)
            if (!space().contains(p))
                throw InconsistencyError("starter " + std::to_string(i) + " " + b.to_string() + " uses unknown point " +
                                         p.to_string());
        for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y)
                if (hole_of(b[x]) == hole_of(b[y]))
                    throw InconsistencyError("starter " + std::to_string(i) + " " + b.to_string() +
                                             " has two points in one hole");
    }
    for (auto m : marked_short)
        if (m >= starters.size()) throw InconsistencyError("short-orbit marker out of range");
}

Block shift_block(const Block& b, std::uint32_t j, std::uint32_t g)
{
    Block out = b;
    for (auto& p : out.pts)
        if (p.is_finite()) p = Point::finite(static_cast<std::uint32_t>((std::uint64_t{p.index()} + j) % g));
    return out;
}

Orbit orbit_of(const Block& b, const StarterSet& s)
{
    Orbit o;
    o.representative = b;
    const auto first = b.canonical();
    o.blocks.push_back(first);
    const auto g = s.modulus();
    for (std::uint32_t j = s.step; j < g; j += s.step) {
        auto c = shift_block(b, j, g).canonical();
        if (c == first) break;
        o.blocks.push_back(c);
    }
    o.length = static_cast<std::uint32_t>(o.blocks.size());
    return o;
}

std::vector<std::uint32_t> orbit_lengths(const StarterSet& s)
{
    std::vector<std::uint32_t> out;
    for (const auto& b : s.starters) out.push_back(orbit_of(b, s).length);
    return out;
}

namespace {

Design shell(const StarterSet& s)
{
    Design d;
    d.space = s.space();
    d.holes = s.holes();
    d.declared_type = s.type();
    return d;
}

[[noreturn]] void duplicate(const StarterSet& s, const Block& b, std::size_t i, std::size_t j)
{
    throw InconsistencyError("block " + b.to_string() + " arises from starters " + std::to_string(i) + " " +
                             s.starters[i].to_string() + " and " + std::to_string(j) + " " +
                             s.starters[j].to_string());
}

} // namespace

Design develop(const StarterSet& s, DevelopOptions opts)
{
    s.validate();
    std::vector<Orbit> orbits(s.starters.size());
    const auto ns = static_cast<std::int64_t>(s.starters.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < ns; ++i) orbits[i] = orbit_of(s.starters[i], s);

    std::vector<std::pair<Block, std::size_t>> all;
    for (std::size_t i = 0; i < orbits.size(); ++i)
        for (const auto& b : orbits[i].blocks) all.emplace_back(b, i);
    std::sort(all.begin(), all.end());
    Design d = shell(s);
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (i > 0 && all[i].first == all[i - 1].first) {
            if (!opts.allow_duplicates) duplicate(s, all[i].first, all[i - 1].second, all[i].second);
            continue;
        }
        d.blocks.push_back(all[i].first);
    }
    return d;
}

namespace serial {

Design develop(const StarterSet& s, DevelopOptions opts)
{
    s.validate();
    std::map<Block, std::size_t> seen;
    const auto g = s.modulus();
    for (std::size_t i = 0; i < s.starters.size(); ++i) {
        std::set<Block> orbit;
        for (std::uint32_t j = 0; j < g; j += s.step) orbit.insert(shift_block(s.starters[i], j, g).canonical());
        for (const auto& b : orbit) {
            auto [it, fresh] = seen.emplace(b, i);
            if (!fresh && !opts.allow_duplicates) duplicate(s, b, it->second, i);
        }
    }
    Design d = shell(s);
    for (const auto& [b, _] : seen) d.blocks.push_back(b);
    return d;
}

} // namespace serial

std::string CensusReport::summary() const
{
    std::ostringstream out;
    out << (pass ? "PASS" : "FAIL");
    for (std::size_t i = 0; i < mismatches.size() && i < 8; ++i) {
        const auto& m = mismatches[i];
        out << (i == 0 ? ": " : "; ");
        if (m.color == 0)
            out << "x" << m.value << " covered " << m.observed << "/" << m.expected;
        else
            out << "color " << m.color << " difference " << m.value << " weight " << m.observed << "/"
                << m.expected;
    }
    if (mismatches.size() > 8) out << "; ...";
    return out.str();
}

CensusReport difference_census(const StarterSet& s)
{
    if (s.step != 1) throw UnsupportedError("difference census needs step 1; use develop and verify");
    s.validate();
    const auto g = s.modulus();
    // Pairs are weighted by orbit length; a full orbit contributes g, so each
    // admissible difference must total exactly g.
    std::vector<std::vector<std::uint64_t>> diff(3, std::vector<std::uint64_t>(g, 0));
    std::vector<std::uint64_t> inf(s.u + 1, 0);
    for (const auto& b : s.starters) {
        auto len = orbit_of(b, s).length;
        for (const auto& cp : b.pairs()) {
            if (cp.p.is_finite() && cp.q.is_finite()) {
                auto d = (cp.q.index() + g - cp.p.index()) % g;
                diff[cp.color - 1][d] += len;
                diff[cp.color - 1][(g - d) % g] += len;
            }
        }
        for (Point p : b.pts)
            if (p.is_infinite()) inf[p.label()] += len;
    }
    std::vector<char> hole_diff(g, 0);
    for (std::uint32_t j = 0; j < s.h; ++j) hole_diff[(j * s.n) % g] = 1;
    CensusReport r;
    for (int c = 0; c < 3; ++c)
        for (std::uint32_t d = 0; d < g; ++d) {
            std::uint64_t want = hole_diff[d] ? 0 : g;
            if (diff[c][d] != want) r.mismatches.push_back({c + 1, d, diff[c][d], want});
        }
    for (std::uint32_t l = 1; l <= s.u; ++l)
        if (inf[l] != g) r.mismatches.push_back({0, l, inf[l], g});
    r.pass = r.mismatches.empty();
    return r;
}

StarterSet read_starter(std::istream& in)
{
    auto lines = detail::read_lines(in, "hsd-starter v1");
    StarterSet s;
    std::optional<TypeSpec> type;
    std::optional<std::uint64_t> modulus, step, infinite;
    std::size_t type_line = 0;
    for (const auto& l : lines) {
        auto once = [&](auto& slot) {
            if (slot) throw ParseError("duplicate '" + l.key + "' line", l.number);
        };
        if (l.key == "type") {
            once(type);
            try {
                type = TypeSpec::parse(l.value);
            }
            catch (const ParseError& e) {
                throw ParseError(e.what(), l.number, e.offset());
            }
            type_line = l.number;
        }
        else if (l.key == "modulus") {
            once(modulus);
            modulus = detail::parse_uint(l.value, l.number);
        }
        else if (l.key == "step") {
            once(step);
            step = detail::parse_uint(l.value, l.number);
        }
        else if (l.key == "infinite") {
            once(infinite);
            infinite = detail::parse_uint(l.value, l.number);
        }
        else if (l.key == "short") {
            for (const auto& tok : detail::split_ws(l.value)) s.marked_short.push_back(detail::parse_uint(tok, l.number));
        }
        else if (l.key == "starter") {
            auto pts = detail::parse_points(l.value, l.number);
            if (pts.size() != 4) throw ParseError("a starter needs exactly 4 points", l.number);
            s.starters.push_back(make_block(pts[0], pts[1], pts[2], pts[3]));
        }
        else
            throw ParseError("unknown header '" + l.key + "'", l.number);
    }
    if (!type || !modulus || !step || !infinite) throw ParseError("missing type, modulus, step or infinite line");
    const auto& parts = type->parts();
    if (parts.size() > 2 || (parts.size() == 2 && parts[1].count != 1))
        throw ParseError("starter type must be h^n or h^n u^1", type_line);
    s.h = parts[0].size;
    s.n = parts[0].count;
    s.u = parts.size() == 2 ? parts[1].size : 0;
    s.step = static_cast<std::uint32_t>(*step);
    if (*modulus != std::uint64_t{s.h} * s.n) throw ParseError("modulus does not equal h*n", type_line);
    if (*infinite != s.u) throw ParseError("infinite count does not match type", type_line);
    try {
        s.validate();
    }
    catch (const InconsistencyError& e) {
        throw ParseError(e.what());
    }
    return s;
}

StarterSet parse_starter(const std::string& text)
{
    std::istringstream in(text);
    return read_starter(in);
}

StarterSet read_starter_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_starter(in);
}

void write_starter(std::ostream& out, const StarterSet& s)
{
    out << "hsd-starter v1\n";
    out << "type: " << s.type().to_string() << "\n";
    out << "modulus: " << s.modulus() << "\n";
    out << "step: " << s.step << "\n";
    out << "infinite: " << s.u << "\n";
    if (!s.marked_short.empty()) {
        out << "short:";
        for (auto m : s.marked_short) out << ' ' << m;
        out << "\n";
    }
    for (const auto& b : s.starters)
        out << "starter: " << b[0].to_string() << ' ' << b[1].to_string() << ' ' << b[2].to_string() << ' '
            << b[3].to_string() << "\n";
}

std::string format_starter(const StarterSet& s)
{
    std::ostringstream out;
    write_starter(out, s);
    return out.str();
}

} // namespace hsd
