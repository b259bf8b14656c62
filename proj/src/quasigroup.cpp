#include "hsd/quasigroup.hpp"

#include "hsd/errors.hpp"
#include "hsd/latin.hpp"

#include <set>
#include <sstream>

namespace hsd {

QuasigroupTable::QuasigroupTable(PointSpace space, HoleStructure holes) :
    space_(space), holes_(std::move(holes)), hole_of_(space.size(), -1),
    cells_(space.size() * space.size(), kUndefined)
{
    for (std::size_t h = 0; h < holes_.holes.size(); ++h) {
        hole_size_.push_back(holes_.holes[h].size());
        for (Point p : holes_.holes[h]) hole_of_[space_.dense(p)] = static_cast<std::int32_t>(h);
    }
}

bool QuasigroupTable::should_define(std::size_t x, std::size_t y) const
{
    if (hole_of_[x] != hole_of_[y]) return true;
    return x == y && hole_of_[x] >= 0 && hole_size_[hole_of_[x]] == 1;
}

std::string QuasigroupTable::to_string() const
{
    std::ostringstream out;
    std::size_t width = 1;
    for (std::size_t i = 0; i < order(); ++i) width = std::max(width, space_.point(i).to_string().size());
    auto cell = [&](const std::string& s) { out << std::string(width - s.size() + 1, ' ') << s; };
    out << std::string(width + 1, ' ') << " |";
    for (std::size_t y = 0; y < order(); ++y) cell(space_.point(y).to_string());
    out << "\n" << std::string(width + 3 + (width + 1) * order(), '-') << "\n";
    for (std::size_t x = 0; x < order(); ++x) {
        cell(space_.point(x).to_string());
        out << " |";
        for (std::size_t y = 0; y < order(); ++y) {
            auto v = at(x, y);
            cell(v == kUndefined ? "." : space_.point(static_cast<std::size_t>(v)).to_string());
        }
        out << "\n";
    }
    return out.str();
}

std::string QuasigroupReport::summary() const
{
    std::ostringstream out;
    out << (pass ? "PASS" : "FAIL");
    if (!pass) {
        out << ", " << issues.size() << " issues";
        if (!issues.empty()) out << "; first: (" << issues[0].x << "," << issues[0].y << ") " << issues[0].what;
    }
    return out.str();
}

QuasigroupTable to_quasigroup(const Design& d)
{
    QuasigroupTable q(d.space, d.holes);
    std::vector<std::int64_t> origin(q.order() * q.order(), -1);
    auto put = [&](std::size_t bi, Point x, Point y, Point v) {
        auto dx = d.space.dense(x), dy = d.space.dense(y);
        if (!q.should_define(dx, dy))
            throw InconsistencyError("block " + std::to_string(bi) + " " + d.blocks[bi].to_string() +
                                     " defines cell (" + x.to_string() + "," + y.to_string() + ") inside a hole");
        auto& o = origin[dx * q.order() + dy];
        if (o >= 0)
            throw InconsistencyError("cell (" + x.to_string() + "," + y.to_string() + ") assigned by block " +
                                     std::to_string(o) + " " + d.blocks[o].to_string() + " and block " +
                                     std::to_string(bi) + " " + d.blocks[bi].to_string());
        o = static_cast<std::int64_t>(bi);
        q.set(dx, dy, static_cast<std::int32_t>(d.space.dense(v)));
    };
    for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
        const auto& b = d.blocks[bi];
        for (Point p : b.pts)
            if (!d.space.contains(p))
                throw InconsistencyError("block " + std::to_string(bi) + " uses unknown point " + p.to_string());
        if (b.has_repeated_point())
            throw InconsistencyError("block " + std::to_string(bi) + " " + b.to_string() + " repeats a point");
        put(bi, b[0], b[1], b[2]);
        put(bi, b[1], b[0], b[3]);
        put(bi, b[2], b[3], b[0]);
        put(bi, b[3], b[2], b[1]);
    }
    for (const auto& h : d.holes.holes)
        if (h.size() == 1) {
            auto x = d.space.dense(h[0]);
            q.set(x, x, static_cast<std::int32_t>(x));
        }
    return q;
}

QuasigroupReport check_schroder_identity(const QuasigroupTable& q)
{
    QuasigroupReport r;
    for (std::size_t x = 0; x < q.order(); ++x)
        for (std::size_t y = 0; y < q.order(); ++y) {
            if (!q.should_define(x, y)) continue;
            auto z = q.at(x, y), w = q.at(y, x);
            if (z == QuasigroupTable::kUndefined || w == QuasigroupTable::kUndefined) {
                r.issues.push_back({x, y, "x*y or y*x undefined"});
                continue;
            }
            auto v = q.at(static_cast<std::size_t>(z), static_cast<std::size_t>(w));
            if (v != static_cast<std::int32_t>(x))
                r.issues.push_back({x, y, "(x*y)*(y*x) = " + (v < 0 ? std::string(".") : std::to_string(v))});
        }
    r.pass = r.issues.empty();
    return r;
}

QuasigroupReport check_latin_outside_holes(const QuasigroupTable& q)
{
    QuasigroupReport r;
    const auto n = q.order();
    auto scan = [&](bool rows) {
        for (std::size_t a = 0; a < n; ++a) {
            std::vector<char> seen(n, 0);
            for (std::size_t b = 0; b < n; ++b) {
                std::size_t x = rows ? a : b, y = rows ? b : a;
                auto v = q.at(x, y);
                if (!q.should_define(x, y)) {
                    if (v != QuasigroupTable::kUndefined) r.issues.push_back({x, y, "defined inside a hole"});
                    continue;
                }
                if (v == QuasigroupTable::kUndefined) {
                    r.issues.push_back({x, y, "undefined cross-hole cell"});
                    continue;
                }
                auto sv = static_cast<std::size_t>(v);
                bool allowed = rows ? q.should_define(x, sv) : q.should_define(sv, y);
                if (!allowed) r.issues.push_back({x, y, "symbol lies in the line's own hole"});
                if (seen[sv]++) r.issues.push_back({x, y, rows ? "symbol repeated in row" : "symbol repeated in column"});
            }
        }
    };
    scan(true);
    scan(false);
    r.pass = r.issues.empty();
    return r;
}

Design from_quasigroup(const QuasigroupTable& q)
{
    auto id = check_schroder_identity(q);
    if (!id.pass) {
        const auto& i = id.issues.front();
        throw InconsistencyError("Schroder identity fails at (" + q.space().point(i.x).to_string() + "," +
                                 q.space().point(i.y).to_string() + "): " + i.what);
    }
    std::set<Block> blocks;
    for (std::size_t x = 0; x < q.order(); ++x)
        for (std::size_t y = x + 1; y < q.order(); ++y) {
            if (q.hole_of(x) == q.hole_of(y)) continue;
            auto c = q.at(x, y), d = q.at(y, x);
            auto& sp = q.space();
            blocks.insert(make_block(sp.point(x), sp.point(y), sp.point(static_cast<std::size_t>(c)),
                                     sp.point(static_cast<std::size_t>(d)))
                              .canonical());
        }
    Design out;
    out.space = q.space();
    out.holes = q.holes();
    out.declared_type = q.holes().type();
    out.blocks.assign(blocks.begin(), blocks.end());
    return out;
}

QuasigroupReport check_weisner_pair(const LatinSquare& l1, const LatinSquare& l2)
{
    QuasigroupReport r;
    if (l1.order != l2.order) {
        r.pass = false;
        r.issues.push_back({0, 0, "orders differ"});
        return r;
    }
    const auto m = l1.order;
    for (std::uint32_t x = 0; x < m; ++x)
        for (std::uint32_t y = 0; y < m; ++y) {
            auto z = l1.at(x, y), w = l2.at(x, y);
            if (l1.at(z, w) != x || l2.at(z, w) != y) r.issues.push_back({x, y, "image of (z,w) is not (x,y)"});
        }
    r.pass = r.issues.empty();
    return r;
}

LatinSquare to_latin_square(const QuasigroupTable& q)
{
    LatinSquare l;
    l.order = static_cast<std::uint32_t>(q.order());
    l.cells.resize(q.order() * q.order());
    for (std::size_t x = 0; x < q.order(); ++x)
        for (std::size_t y = 0; y < q.order(); ++y) {
            auto v = q.at(x, y);
            if (v == QuasigroupTable::kUndefined) throw InconsistencyError("table has undefined cells");
            l.cells[x * q.order() + y] = static_cast<std::uint32_t>(v);
        }
    return l;
}

} // namespace hsd
