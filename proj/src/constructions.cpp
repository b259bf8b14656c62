#include "hsd/constructions.hpp"

#include "hsd/errors.hpp"
#include "hsd/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace hsd {

WeightAssignment WeightAssignment::uniform(const Gdd& g, std::uint32_t w)
{
    return WeightAssignment{std::vector<std::uint32_t>(g.space.size(), w)};
}

namespace {

void certify(Design& d, const char* what)
{
    d.canonicalize();
    auto r = verify_design(d);
    if (!r.pass) throw InconsistencyError(std::string(what) + " produced an invalid design: " + r.summary());
}

// Maps each hole of `ingredient` onto a target point list of the same size. `targets[i]` receives
// the hole matched to it; holes are matched by size in order.
std::vector<std::uint32_t> align_holes(const Design& ingredient, const std::vector<std::vector<std::uint32_t>>& targets)
{
    std::vector<std::size_t> hole_order(ingredient.holes.holes.size()), target_order(targets.size());
    std::iota(hole_order.begin(), hole_order.end(), 0);
    std::iota(target_order.begin(), target_order.end(), 0);
    auto hsize = [&](std::size_t i) { return ingredient.holes.holes[i].size(); };
    std::stable_sort(hole_order.begin(), hole_order.end(), [&](auto a, auto b) { return hsize(a) < hsize(b); });
    std::stable_sort(target_order.begin(), target_order.end(),
                     [&](auto a, auto b) { return targets[a].size() < targets[b].size(); });
    if (hole_order.size() != target_order.size()) throw IngredientError("ingredient hole count mismatch");
    std::vector<std::uint32_t> map(ingredient.space.size(), 0);
    for (std::size_t k = 0; k < hole_order.size(); ++k) {
        const auto& hole = ingredient.holes.holes[hole_order[k]];
        const auto& tgt = targets[target_order[k]];
        if (hole.size() != tgt.size()) throw IngredientError("ingredient hole sizes do not match");
        auto sorted = hole;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) map[ingredient.space.dense(sorted[i])] = tgt[i];
    }
    return map;
}

void append_relabeled(std::vector<Block>& out, const Design& ingredient, const std::vector<std::uint32_t>& map)
{
    for (const auto& b : ingredient.blocks) {
        Block nb;
        for (int i = 0; i < 4; ++i) nb.pts[i] = Point::finite(map[ingredient.space.dense(b[i])]);
        out.push_back(nb);
    }
}

} // namespace

Design weight_inflate(const Gdd& g, const WeightAssignment& w, const IngredientSupplier& supply)
{
    const auto n = g.space.size();
    if (w.weights.size() != n) throw InconsistencyError("weight assignment size differs from GDD point count");
    std::vector<std::uint32_t> offset(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + w.weights[i];

    Design out;
    out.space = PointSpace{offset[n], 0};
    std::vector<std::uint32_t> sizes;
    for (const auto& grp : g.groups) {
        std::vector<Point> hole;
        for (Point p : grp) {
            auto x = g.space.dense(p);
            for (auto i = offset[x]; i < offset[x + 1]; ++i) hole.push_back(Point::finite(i));
        }
        if (!hole.empty()) {
            sizes.push_back(static_cast<std::uint32_t>(hole.size()));
            out.holes.holes.push_back(std::move(hole));
        }
    }
    out.declared_type = TypeSpec::from_sizes(sizes);

    // Ingredient lookup is serial (suppliers may cache); relabeling is per block.
    std::vector<std::shared_ptr<const Design>> ingredient(g.blocks.size());
    std::map<TypeSpec, std::shared_ptr<const Design>> cache;
    for (std::size_t bi = 0; bi < g.blocks.size(); ++bi) {
        std::vector<std::uint32_t> ws;
        for (Point p : g.blocks[bi]) ws.push_back(w(g.space.dense(p)));
        std::size_t nonzero = std::count_if(ws.begin(), ws.end(), [](auto x) { return x > 0; });
        if (nonzero <= 1) continue;
        auto t = TypeSpec::from_sizes(ws);
        auto it = cache.find(t);
        if (it == cache.end()) {
            auto d = supply ? supply(t) : nullptr;
            if (!d) throw IngredientError("no HSD of type " + t.to_string() + " for block " + std::to_string(bi));
            it = cache.emplace(t, d).first;
        }
        ingredient[bi] = it->second;
    }

    std::vector<std::vector<Block>> parts(g.blocks.size());
    const auto nb = static_cast<std::int64_t>(g.blocks.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t bi = 0; bi < nb; ++bi) {
        if (!ingredient[bi]) continue;
        try {
            std::vector<std::vector<std::uint32_t>> fibers;
            for (Point p : g.blocks[bi]) {
                auto x = g.space.dense(p);
                if (w(x) == 0) continue;
                std::vector<std::uint32_t> f(w(x));
                std::iota(f.begin(), f.end(), offset[x]);
                fibers.push_back(std::move(f));
            }
            append_relabeled(parts[bi], *ingredient[bi], align_holes(*ingredient[bi], fibers));
        }
        catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    for (auto& p : parts) out.blocks.insert(out.blocks.end(), p.begin(), p.end());
    certify(out, "weight_inflate");
    return out;
}

namespace {

Design multiplied_shell(const Design& d, std::uint32_t m)
{
    Design out;
    out.space = PointSpace{static_cast<std::uint32_t>(d.space.size() * m), 0};
    for (const auto& h : d.holes.holes) {
        std::vector<Point> hole;
        for (Point p : h)
            for (std::uint32_t i = 0; i < m; ++i)
                hole.push_back(Point::finite(static_cast<std::uint32_t>(d.space.dense(p) * m + i)));
        std::sort(hole.begin(), hole.end());
        out.holes.holes.push_back(std::move(hole));
    }
    std::vector<TypePart> parts;
    for (const auto& part : d.declared_type.parts()) parts.push_back({part.size * m, part.count});
    out.declared_type = TypeSpec(parts);
    return out;
}

void check_pair(const LatinSquare& a, const LatinSquare& b)
{
    if (a.order != b.order || !a.is_latin() || !b.is_latin() || !are_orthogonal(a, b))
        throw IngredientError("multiply needs an orthogonal pair of Latin squares");
}

} // namespace

Design multiply(const Design& d, const LatinSquare& a, const LatinSquare& b)
{
    check_pair(a, b);
    const auto m = a.order;
    Design out = multiplied_shell(d, m);
    out.blocks.resize(d.blocks.size() * m * m);
    const auto nb = static_cast<std::int64_t>(d.blocks.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t bi = 0; bi < nb; ++bi) {
        const auto& blk = d.blocks[bi];
        std::uint32_t base[4];
        for (int k = 0; k < 4; ++k) base[k] = static_cast<std::uint32_t>(d.space.dense(blk[k]) * m);
        std::size_t at = static_cast<std::size_t>(bi) * m * m;
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = 0; j < m; ++j)
                out.blocks[at++] = make_block(Point::finite(base[0] + i), Point::finite(base[1] + j),
                                              Point::finite(base[2] + a.at(i, j)), Point::finite(base[3] + b.at(i, j)));
    }
    certify(out, "multiply");
    return out;
}

Design multiply(const Design& d, std::uint32_t m)
{
    if (m == 0) throw UnsupportedError("multiplier must be positive");
    if (m == 2 || m == 6) throw UnsupportedError("no orthogonal Latin square pair of order " + std::to_string(m));
    auto ms = mols_of_order(m, 2);
    if (!ms) throw IngredientError("no MOLS pair of order " + std::to_string(m) + " available");
    return multiply(d, ms->squares[0], ms->squares[1]);
}

namespace serial {

Design multiply(const Design& d, const LatinSquare& a, const LatinSquare& b)
{
    check_pair(a, b);
    const auto m = a.order;
    Design out = multiplied_shell(d, m);
    for (const auto& blk : d.blocks)
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = 0; j < m; ++j) {
                auto pt = [&](int k, std::uint32_t x) {
                    return Point::finite(static_cast<std::uint32_t>(d.space.dense(blk[k]) * m + x));
                };
                out.blocks.push_back(make_block(pt(0, i), pt(1, j), pt(2, a.at(i, j)), pt(3, b.at(i, j))));
            }
    certify(out, "multiply");
    return out;
}

} // namespace serial

namespace {

struct HoleSplit {
    std::vector<std::size_t> filled; // holes of size hs
    std::optional<std::size_t> t_hole;
    std::optional<std::size_t> w_hole;
};

HoleSplit split_holes(const Design& outer, const FillParams& p, bool with_t)
{
    HoleSplit s;
    std::vector<char> used(outer.holes.holes.size(), 0);
    auto take_last = [&](std::size_t size) -> std::optional<std::size_t> {
        for (std::size_t i = outer.holes.holes.size(); i-- > 0;)
            if (!used[i] && outer.holes.holes[i].size() == size) {
                used[i] = 1;
                return i;
            }
        return std::nullopt;
    };
    if (p.w > 0) {
        s.w_hole = take_last(p.w);
        if (!s.w_hole) throw InconsistencyError("hole-size mismatch: outer has no hole of size " + std::to_string(p.w));
    }
    if (with_t && p.t > 0) {
        s.t_hole = take_last(std::size_t{p.h} * p.t);
        if (!s.t_hole)
            throw InconsistencyError("hole-size mismatch: outer has no hole of size " + std::to_string(p.h * p.t));
    }
    for (std::size_t i = 0; i < outer.holes.holes.size(); ++i) {
        if (used[i]) continue;
        if (outer.holes.holes[i].size() != std::size_t{p.h} * p.s)
            throw InconsistencyError("hole-size mismatch: outer hole of size " +
                                     std::to_string(outer.holes.holes[i].size()) + ", expected " +
                                     std::to_string(p.h * p.s));
        s.filled.push_back(i);
    }
    return s;
}

void check_inner(const Design& inner, std::uint32_t h, std::uint32_t s, std::uint32_t v)
{
    std::vector<std::uint32_t> sizes(s, h);
    sizes.push_back(v);
    if (!(inner.holes.type() == TypeSpec::from_sizes(sizes)))
        throw IngredientError("inner design has type " + inner.holes.type().to_string() + ", expected " +
                              TypeSpec::from_sizes(sizes).to_string());
}

// Chunks a hole (sorted) into pieces of size h and overlays the inner design, whose
// remaining v-hole maps onto `fresh`.
void overlay(Design& out, const Design& outer, const std::vector<Point>& hole, const Design& inner, std::uint32_t h,
             const std::vector<std::uint32_t>& fresh, std::vector<std::vector<Point>>& chunk_holes)
{
    auto pts = hole;
    std::sort(pts.begin(), pts.end());
    std::vector<std::vector<std::uint32_t>> targets;
    for (std::size_t i = 0; i < pts.size(); i += h) {
        std::vector<std::uint32_t> chunk;
        std::vector<Point> as_points;
        for (std::size_t j = i; j < i + h; ++j) {
            auto x = static_cast<std::uint32_t>(outer.space.dense(pts[j]));
            chunk.push_back(x);
            as_points.push_back(Point::finite(x));
        }
        targets.push_back(std::move(chunk));
        chunk_holes.push_back(std::move(as_points));
    }
    if (!fresh.empty()) targets.push_back(fresh);
    if (inner.blocks.empty() && inner.holes.holes.size() <= 1) return;
    append_relabeled(out.blocks, inner, align_holes(inner, targets));
}

Design fill(const Design& outer, const Design& inner_s, const Design* inner_t, const FillParams& p)
{
    if (p.h == 0 || p.s == 0) throw InconsistencyError("fill needs positive h and s");
    auto split = split_holes(outer, p, inner_t != nullptr);
    check_inner(inner_s, p.h, p.s, p.v);
    if (inner_t && p.t > 0) check_inner(*inner_t, p.h, p.t, p.v);

    Design out;
    const auto base = static_cast<std::uint32_t>(outer.space.size());
    out.space = PointSpace{base + p.v, 0};
    std::vector<std::uint32_t> fresh(p.v);
    std::iota(fresh.begin(), fresh.end(), base);

    for (const auto& b : outer.blocks) {
        Block nb;
        for (int i = 0; i < 4; ++i) nb.pts[i] = Point::finite(static_cast<std::uint32_t>(outer.space.dense(b[i])));
        out.blocks.push_back(nb);
    }
    std::vector<std::vector<Point>> holes;
    for (auto hi : split.filled) overlay(out, outer, outer.holes.holes[hi], inner_s, p.h, fresh, holes);
    if (split.t_hole) overlay(out, outer, outer.holes.holes[*split.t_hole], *inner_t, p.h, fresh, holes);
    std::vector<Point> last;
    if (split.w_hole)
        for (Point q : outer.holes.holes[*split.w_hole]) last.push_back(Point::finite(static_cast<std::uint32_t>(outer.space.dense(q))));
    for (auto f : fresh) last.push_back(Point::finite(f));
    std::sort(last.begin(), last.end());
    out.holes.holes = std::move(holes);
    if (!last.empty()) out.holes.holes.push_back(std::move(last));

    std::vector<TypePart> parts{{p.h, static_cast<std::uint32_t>(out.holes.holes.size() - (p.w + p.v > 0 ? 1 : 0))}};
    if (p.w + p.v > 0) parts.push_back({p.w + p.v, 1});
    out.declared_type = TypeSpec(parts);
    certify(out, inner_t ? "fill_holes_b" : "fill_holes_a");
    return out;
}

} // namespace

Design fill_holes_a(const Design& outer, const Design& inner, const FillParams& p)
{
    FillParams q = p;
    q.t = 0;
    return fill(outer, inner, nullptr, q);
}

Design fill_holes_b(const Design& outer, const Design& inner_s, const Design& inner_t, const FillParams& p)
{
    return fill(outer, inner_s, &inner_t, p);
}

} // namespace hsd
