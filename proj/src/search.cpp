#include "hsd/search.hpp"

#include "hsd/errors.hpp"
#include "hsd/verify.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <set>

namespace hsd {

bool cyclic_shape(const TypeSpec& t, std::uint32_t& h, std::uint32_t& n, std::uint32_t& u)
{
    const auto& parts = t.parts();
    if (parts.size() == 1) {
        h = parts[0].size;
        n = parts[0].count;
        u = 0;
        return true;
    }
    if (parts.size() == 2 && parts[1].count == 1) {
        h = parts[0].size;
        n = parts[0].count;
        u = parts[1].size;
        return true;
    }
    if (parts.size() == 2 && parts[0].count == 1) {
        h = parts[1].size;
        n = parts[1].count;
        u = parts[0].size;
        return true;
    }
    return false;
}

namespace {

using Quad = std::array<std::uint32_t, 4>;

Quad canonical(const Quad& b)
{
    auto [a, x, c, d] = b;
    return std::min({Quad{a, x, c, d}, Quad{x, a, d, c}, Quad{c, d, a, x}, Quad{d, c, x, a}});
}

Quad sorted(Quad b)
{
    std::sort(b.begin(), b.end());
    return b;
}

// Z_g acting by +step on 0..g-1, fixing g..g+u-1; holes {i, i+n, ...} and the infinite hole.
struct Cyclic {
    std::uint32_t h, n, u, step, g, points, cycle;

    Cyclic(std::uint32_t h_, std::uint32_t n_, std::uint32_t u_, std::uint32_t step_, std::uint32_t cycle_ = 1) :
        h(h_), n(n_), u(u_), step(step_), g(h_ * n_), points(h_ * n_ + u_), cycle(cycle_)
    {
        if (h == 0 || n == 0) throw UnsupportedError("cyclic search needs h, n > 0");
        if (step == 0 || g % step != 0) throw UnsupportedError("step must divide h*n");
        if (cycle == 0 || u % cycle != 0 || (g / step) % cycle != 0)
            throw UnsupportedError("infinite cycle must divide u and h*n/step");
    }

    std::uint32_t hole(std::uint32_t x) const { return x < g ? x % n : n; }
    // Infinite points g + c*k + r move to g + c*k + (r + j/step) mod c.
    std::uint32_t shift(std::uint32_t x, std::uint32_t j) const
    {
        if (x < g) return (x + j) % g;
        const std::uint32_t off = x - g;
        return g + off - off % cycle + (off % cycle + j / step) % cycle;
    }
    Quad shift(const Quad& b, std::uint32_t j) const
    {
        return {shift(b[0], j), shift(b[1], j), shift(b[2], j), shift(b[3], j)};
    }
    Point point(std::uint32_t x) const { return x < g ? Point::finite(x) : Point::infinite(x - g + 1); }

    // Orbit id for each cross-hole unordered pair (index x*points+y, x<y); -1 elsewhere.
    std::vector<std::int32_t> pair_orbits(std::uint32_t& count) const
    {
        std::vector<std::int32_t> id(std::size_t{points} * points, -1);
        count = 0;
        for (std::uint32_t x = 0; x < points; ++x)
            for (std::uint32_t y = x + 1; y < points; ++y) {
                if (hole(x) == hole(y) || id[x * points + y] >= 0) continue;
                for (std::uint32_t j = 0; j < g; j += step) {
                    auto a = shift(x, j), b = shift(y, j);
                    if (a > b) std::swap(a, b);
                    id[a * points + b] = static_cast<std::int32_t>(count);
                }
                ++count;
            }
        return id;
    }

    bool distinct_holes(const Quad& b) const
    {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (hole(b[i]) == hole(b[j])) return false;
        return true;
    }
};

struct OrbitRow {
    Quad rep;
    std::vector<std::uint32_t> items;
};

// Enumerates block orbits whose representative has its least point below `step`. With `colored`
// blocks are ordered quadruples up to equivalence, otherwise 4-sets. Orbits covering any pair
// twice are dropped.
std::vector<OrbitRow> orbit_rows(const Cyclic& cy, bool colored, const std::vector<std::int32_t>& pair_id,
                                 std::uint32_t pair_orbits)
{
    std::vector<OrbitRow> rows;
    const auto P = cy.points;
    std::vector<std::uint64_t> keys;
    auto consider = [&](const Quad& b) {
        if (!cy.distinct_holes(b)) return;
        auto norm = [&](const Quad& q) { return colored ? canonical(q) : sorted(q); };
        const Quad first = norm(b);
        if (first != b) return;
        std::vector<Quad> orbit{first};
        for (std::uint32_t j = cy.step; j < cy.g; j += cy.step) {
            auto c = norm(cy.shift(b, j));
            if (c == first) break;
            if (c < b) return; // not the orbit representative
            orbit.push_back(c);
        }
        keys.clear();
        for (const auto& q : orbit) {
            auto key = [&](std::uint32_t x, std::uint32_t y, std::uint32_t color) {
                if (x > y) std::swap(x, y);
                return (std::uint64_t{color} * P + x) * P + y;
            };
            if (colored) {
                keys.push_back(key(q[0], q[1], 0));
                keys.push_back(key(q[2], q[3], 0));
                keys.push_back(key(q[0], q[2], 1));
                keys.push_back(key(q[1], q[3], 1));
                keys.push_back(key(q[0], q[3], 2));
                keys.push_back(key(q[1], q[2], 2));
            }
            else
                for (int i = 0; i < 4; ++i)
                    for (int j = i + 1; j < 4; ++j) keys.push_back(key(q[i], q[j], 0));
        }
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) return;
        std::set<std::uint32_t> items;
        for (auto k : keys) {
            auto y = static_cast<std::uint32_t>(k % P), x = static_cast<std::uint32_t>(k / P % P),
                 color = static_cast<std::uint32_t>(k / P / P);
            items.insert(color * pair_orbits + static_cast<std::uint32_t>(pair_id[x * P + y]));
        }
        rows.push_back({b, std::vector<std::uint32_t>(items.begin(), items.end())});
    };
    for (std::uint32_t a = 0; a < cy.step && a < cy.g; ++a)
        for (std::uint32_t b = a + 1; b < P; ++b)
            for (std::uint32_t c = colored ? a + 1 : b + 1; c < P; ++c) {
                if (c == b) continue;
                for (std::uint32_t d = colored ? a + 1 : c + 1; d < P; ++d) {
                    if (d == b || d == c) continue;
                    consider({a, b, c, d});
                }
            }
    return rows;
}

template <typename T>
SearchResult<T> shell_result(const ExactCover& ec, const ExactCover::Result& r)
{
    SearchResult<T> out;
    out.status = r.status;
    out.nodes = r.nodes;
    out.rows = ec.row_count();
    out.items = ec.item_count();
    return out;
}

} // namespace

SearchResult<StarterSet> search_starters(std::uint32_t h, std::uint32_t n, std::uint32_t u, std::uint32_t step,
                                         const SearchBudget& budget)
{
    Cyclic cy(h, n, u, step);
    std::uint32_t npo = 0;
    auto pid = cy.pair_orbits(npo);
    auto rows = orbit_rows(cy, true, pid, npo);
    ExactCover ec(3 * std::size_t{npo});
    for (const auto& r : rows) ec.add_row(r.items);
    auto res = ec.solve(budget);
    auto out = shell_result<StarterSet>(ec, res);
    if (res.status != SearchStatus::Found) return out;
    StarterSet s;
    s.h = h;
    s.n = n;
    s.u = u;
    s.step = step;
    std::vector<std::size_t> chosen = res.rows;
    std::sort(chosen.begin(), chosen.end());
    for (auto ri : chosen) {
        const auto& q = rows[ri].rep;
        s.starters.push_back(make_block(cy.point(q[0]), cy.point(q[1]), cy.point(q[2]), cy.point(q[3])));
    }
    auto check = verify_design(develop(s));
    if (!check.pass) throw InconsistencyError("search_starters produced an invalid set: " + check.summary());
    out.value = std::move(s);
    return out;
}

SearchResult<StarterSet> search_starters(const TypeSpec& t, std::uint32_t step, const SearchBudget& budget)
{
    std::uint32_t h = 0, n = 0, u = 0;
    if (!cyclic_shape(t, h, n, u)) throw UnsupportedError("type " + t.to_string() + " is not of shape h^n u^1");
    return search_starters(h, n, u, step, budget);
}

SearchResult<Gdd> search_gdd(std::uint32_t h, std::uint32_t n, std::uint32_t u, std::uint32_t step,
                             const SearchBudget& budget, std::uint32_t infinite_cycle)
{
    Cyclic cy(h, n, u, step, infinite_cycle);
    std::uint32_t npo = 0;
    auto pid = cy.pair_orbits(npo);
    auto rows = orbit_rows(cy, false, pid, npo);
    ExactCover ec(npo);
    for (const auto& r : rows) ec.add_row(r.items);
    auto res = ec.solve(budget);
    auto out = shell_result<Gdd>(ec, res);
    if (res.status != SearchStatus::Found) return out;
    Gdd g;
    g.space = PointSpace{cy.points, 0};
    for (std::uint32_t i = 0; i < n; ++i) {
        std::vector<Point> grp;
        for (std::uint32_t j = 0; j < h; ++j) grp.push_back(Point::finite(i + j * n));
        g.groups.push_back(std::move(grp));
    }
    if (u > 0) {
        std::vector<Point> grp;
        for (std::uint32_t x = cy.g; x < cy.points; ++x) grp.push_back(Point::finite(x));
        g.groups.push_back(std::move(grp));
    }
    std::set<Quad> blocks;
    for (auto ri : res.rows) {
        const auto& rep = rows[ri].rep;
        for (std::uint32_t j = 0; j < cy.g; j += step) blocks.insert(sorted(cy.shift(rep, j)));
    }
    for (const auto& q : blocks)
        g.blocks.push_back({Point::finite(q[0]), Point::finite(q[1]), Point::finite(q[2]), Point::finite(q[3])});
    auto check = verify_gdd(g);
    if (!check.pass) throw InconsistencyError("search_gdd produced an invalid GDD: " + check.summary());
    out.value = std::move(g);
    return out;
}

SearchResult<Design> search_direct(const TypeSpec& t, const SearchBudget& budget, std::ostream* proof_log)
{
    Design d = empty_design(t);
    const auto P = static_cast<std::uint32_t>(d.space.size());
    std::vector<std::uint32_t> hole(P);
    for (std::uint32_t hi = 0; hi < d.holes.holes.size(); ++hi)
        for (Point p : d.holes.holes[hi]) hole[p.index()] = hi;

    std::vector<std::int32_t> pair_id(std::size_t{P} * P, -1);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t x = 0; x < P; ++x)
        for (std::uint32_t y = x + 1; y < P; ++y)
            if (hole[x] != hole[y]) {
                pair_id[x * P + y] = static_cast<std::int32_t>(pairs.size());
                pairs.emplace_back(x, y);
            }
    const auto np = static_cast<std::uint32_t>(pairs.size());
    auto item = [&](std::uint32_t x, std::uint32_t y, std::uint32_t color) {
        if (x > y) std::swap(x, y);
        return color * np + static_cast<std::uint32_t>(pair_id[x * P + y]);
    };

    // Symmetry breaking on the first pair {p0,p1}: its block's third and fourth points are
    // restricted to orbit representatives of the hole-preserving stabilizer of p0 and p1.
    std::uint32_t p0 = 0, p1 = 0;
    bool breaking = !pairs.empty();
    if (breaking) p1 = pairs.front().second;
    auto reps = [&](std::set<std::uint32_t> banned_holes) {
        std::set<std::uint32_t> out, sizes;
        for (std::uint32_t hi = 0; hi < d.holes.holes.size(); ++hi) {
            if (banned_holes.count(hi)) continue;
            auto sz = static_cast<std::uint32_t>(d.holes.holes[hi].size());
            if (sizes.insert(sz).second) out.insert(d.holes.holes[hi].front().index());
        }
        return out;
    };

    std::vector<Quad> rows;
    ExactCover ec(3 * std::size_t{np});
    auto add = [&](const Quad& q) {
        rows.push_back(q);
        ec.add_row({item(q[0], q[1], 0), item(q[2], q[3], 0), item(q[0], q[2], 1), item(q[1], q[3], 1),
                    item(q[0], q[3], 2), item(q[1], q[2], 2)});
    };
    for (std::uint32_t a = 0; a < P; ++a)
        for (std::uint32_t b = a + 1; b < P; ++b) {
            if (hole[b] == hole[a]) continue;
            for (std::uint32_t c = a + 1; c < P; ++c) {
                if (c == b || hole[c] == hole[a] || hole[c] == hole[b]) continue;
                for (std::uint32_t dd = a + 1; dd < P; ++dd) {
                    if (dd == b || dd == c || hole[dd] == hole[a] || hole[dd] == hole[b] || hole[dd] == hole[c])
                        continue;
                    if (breaking && a == p0 && b == p1) {
                        auto rc = reps({hole[p0], hole[p1]});
                        if (!rc.count(c)) continue;
                        auto rd = reps({hole[p0], hole[p1], hole[c]});
                        if (!rd.count(dd)) continue;
                    }
                    add({a, b, c, dd});
                }
            }
        }

    auto name_item = [&](std::uint32_t it) {
        auto [x, y] = pairs[it % np];
        return "c" + std::to_string(it / np + 1) + "{" + std::to_string(x) + "," + std::to_string(y) + "}";
    };
    ExactCover::ProofLog log;
    if (proof_log) {
        *proof_log << "# search_direct " << t.to_string() << ": " << ec.item_count() << " items, " << ec.row_count()
                   << " rows\n";
        log = [&](std::size_t depth, std::uint32_t it, std::size_t row) {
            *proof_log << std::string(depth, ' ') << name_item(it) << ' ';
            if (row == std::numeric_limits<std::size_t>::max())
                *proof_log << "dead-end\n";
            else {
                const auto& q = rows[row];
                *proof_log << "[" << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << "]\n";
            }
        };
    }
    auto res = ec.solve(budget, log);
    if (proof_log) *proof_log << "# result " << to_string(res.status) << " nodes " << res.nodes << "\n";
    auto out = shell_result<Design>(ec, res);
    if (res.status != SearchStatus::Found) return out;
    for (auto ri : res.rows) {
        const auto& q = rows[ri];
        d.blocks.push_back(make_block(Point::finite(q[0]), Point::finite(q[1]), Point::finite(q[2]), Point::finite(q[3])));
    }
    d.canonicalize();
    auto check = verify_design(d);
    if (!check.pass) throw InconsistencyError("search_direct produced an invalid design: " + check.summary());
    out.value = std::move(d);
    return out;
}

} // namespace hsd
