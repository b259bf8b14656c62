#include "hsd/prover.hpp"

#include "hsd/constructions.hpp"
#include "hsd/errors.hpp"
#include "hsd/gdd.hpp"
#include "hsd/latin.hpp"
#include "hsd/search.hpp"
#include "hsd/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hsd {

std::string Recipe::param(const std::string& key) const
{
    for (const auto& [k, v] : params)
        if (k == key) return v;
    return {};
}

namespace {

void print_recipe(std::ostringstream& out, const Recipe& r, std::size_t indent)
{
    out << std::string(indent * 2, ' ') << r.rule << ' ' << r.target.to_string();
    for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
    out << '\n';
    for (const auto& c : r.children) print_recipe(out, *c, indent + 1);
}

} // namespace

std::string Recipe::to_string() const
{
    std::ostringstream out;
    print_recipe(out, *this, 0);
    return out.str();
}

std::size_t Recipe::depth() const
{
    std::size_t d = 0;
    for (const auto& c : children) d = std::max(d, c->depth());
    return d + 1;
}

const char* to_string(VerdictKind k)
{
    switch (k) {
    case VerdictKind::Exists: return "EXISTS";
    case VerdictKind::Infeasible: return "INFEASIBLE";
    case VerdictKind::UnknownHere: return "UNKNOWN_HERE";
    }
    return "?";
}

namespace {

// (h, n, u) when t is 3^n u^1 or 3^n; a lone 3^M reads as (M, 0).
bool three_shape(const TypeSpec& t, std::uint64_t& n, std::uint64_t& u)
{
    const auto& p = t.parts();
    if (p.size() == 1 && p[0].size == 3) {
        n = p[0].count;
        u = 0;
        return true;
    }
    if (p.size() == 2) {
        for (int i = 0; i < 2; ++i)
            if (p[i].size == 3 && p[1 - i].count == 1) {
                n = p[i].count;
                u = p[1 - i].size;
                return true;
            }
    }
    return false;
}

std::uint64_t cross_pairs(const std::vector<std::uint32_t>& sizes)
{
    std::uint64_t total = std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0});
    std::uint64_t c = total * (total - (total ? 1 : 0)) / 2;
    for (auto s : sizes) c -= std::uint64_t{s} * (s ? s - 1 : 0) / 2;
    return c;
}

std::shared_ptr<Recipe> node(std::string rule, const TypeSpec& target)
{
    auto r = std::make_shared<Recipe>();
    r->rule = std::move(rule);
    r->target = target.normalized();
    return r;
}

TypeSpec type_of(std::uint32_t h, std::uint64_t n, std::uint32_t u)
{
    std::vector<std::uint32_t> sizes(n, h);
    sizes.push_back(u);
    return TypeSpec::from_sizes(sizes);
}

// h^N W^1 readings of a type; W = 0 means no extra hole.
std::vector<std::array<std::uint32_t, 3>> hole_family(const TypeSpec& t)
{
    std::vector<std::array<std::uint32_t, 3>> out;
    const auto& p = t.parts();
    if (p.size() == 1) {
        out.push_back({p[0].size, p[0].count, 0});
        if (p[0].count > 1) out.push_back({p[0].size, p[0].count - 1, p[0].size});
    }
    else if (p.size() == 2) {
        if (p[1].count == 1) out.push_back({p[0].size, p[0].count, p[1].size});
        if (p[0].count == 1 && p[1].count != 1) out.push_back({p[1].size, p[1].count, p[0].size});
    }
    return out;
}

struct TdwShape {
    std::uint32_t m = 0;
    std::uint32_t k = 0;
    std::uint32_t u = 0;
};

// (3m)^4 (3k)^1 u^1 with 0 <= k <= m, u even, 0 <= u <= 4m.
std::vector<TdwShape> tdw_shapes(const TypeSpec& t)
{
    std::vector<TdwShape> out;
    auto sizes = t.sizes();
    std::sort(sizes.begin(), sizes.end());
    std::set<std::uint32_t> candidates(sizes.begin(), sizes.end());
    for (auto big : candidates) {
        if (big % 3 || std::count(sizes.begin(), sizes.end(), big) < 4) continue;
        const auto m = big / 3;
        auto rest = sizes;
        for (int i = 0; i < 4; ++i) rest.erase(std::find(rest.begin(), rest.end(), big));
        if (rest.size() > 2) continue;
        while (rest.size() < 2) rest.push_back(0);
        for (int i = 0; i < 2; ++i) {
            auto a = rest[i], u = rest[1 - i];
            if (a % 3 || a / 3 > m || u % 2 || u > 4 * m) continue;
            TdwShape s{m, a / 3, u};
            bool dup = std::any_of(out.begin(), out.end(),
                                   [&](const TdwShape& o) { return o.m == s.m && o.k == s.k && o.u == s.u; });
            if (!dup) out.push_back(s);
        }
    }
    return out;
}

// Weight on the sixth group: as many 4s as possible, then a 2.
std::vector<std::uint32_t> even_weights(std::uint32_t m, std::uint32_t u)
{
    std::vector<std::uint32_t> w(m, 0);
    std::uint32_t left = u;
    for (std::uint32_t i = 0; i < m && left; ++i) {
        w[i] = std::min<std::uint32_t>(4, left);
        left -= w[i];
    }
    return w;
}

std::uint32_t to_u32(const std::string& s) { return static_cast<std::uint32_t>(std::stoul(s)); }

} // namespace

bool type_may_exist(const TypeSpec& t, std::string* why)
{
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    auto sizes = t.sizes();
    sizes.erase(std::remove(sizes.begin(), sizes.end(), 0u), sizes.end());
    if (sizes.size() <= 1) return true;
    try {
        expected_block_count(t);
    }
    catch (const InfeasibleTypeError&) {
        return fail("block count not integral");
    }
    if (sizes.size() < 4) return fail("fewer than four holes");
    std::sort(sizes.begin(), sizes.end());
    const std::uint64_t u = sizes.back();
    std::vector<std::uint32_t> rest(sizes.begin(), sizes.end() - 1);
    const std::uint64_t a = std::accumulate(rest.begin(), rest.end(), std::uint64_t{0});
    const auto inside = cross_pairs(rest);
    // Every block meets the largest hole at most once and then covers one pair of the rest per color.
    if (u * a > inside) return fail("largest hole too large");
    if (rest.size() < 4 && u * a != inside) return fail("every block must meet the largest hole");
    const auto norm = t.normalized();
    for (const char* bad : {"1^5", "1^9", "2^4"})
        if (norm == TypeSpec::parse(bad)) return fail(std::string("known not to exist: ") + bad);
    std::uint64_t n = 0, v = 0;
    if (three_shape(norm, n, v) && !is_feasible(n, v).feasible) return fail(is_feasible(n, v).describe());
    return true;
}

Prover::Prover(ProverOptions opts, const Catalog& catalog) : opts_(opts), catalog_(catalog) {}

std::shared_ptr<const Recipe> Prover::try_search(const TypeSpec& t)
{
    std::uint64_t blocks = 0;
    try {
        blocks = expected_block_count(t);
    }
    catch (const InfeasibleTypeError&) {
        return nullptr;
    }
    if (blocks == 0 || blocks > opts_.search_max_blocks) return nullptr;
    auto it = search_cache_.find(t);
    if (it == search_cache_.end()) {
        SearchBudget budget;
        budget.node_limit = opts_.search_nodes;
        budget.threads = 1;
        auto res = search_direct(t, budget);
        std::shared_ptr<const Design> d;
        if (res.value) d = std::make_shared<const Design>(std::move(*res.value));
        it = search_cache_.emplace(t, d).first;
    }
    if (!it->second) return nullptr;
    auto r = node("R-SEARCH", t);
    r->params = {{"method", "search_direct"}, {"blocks", std::to_string(it->second->blocks.size())}};
    return r;
}

std::shared_ptr<const Design> Prover::searched_design(const TypeSpec& t)
{
    auto it = search_cache_.find(t);
    if (it != search_cache_.end() && it->second) return it->second;
    if (!try_search(t)) throw Error("search for " + t.to_string() + " failed during materialization");
    return search_cache_.at(t);
}

Prover::Outcome Prover::resolve(const TypeSpec& target, std::size_t depth)
{
    const auto t = target.normalized();
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;
    if (depth > opts_.max_depth) return Outcome{nullptr, {"depth limit at " + t.to_string()}, true};
    auto out = resolve_uncached(t, depth);
    if (out.recipe || !out.truncated) memo_.emplace(t, out);
    return out;
}

Prover::Outcome Prover::resolve_uncached(const TypeSpec& t, std::size_t depth)
{
    Outcome out;
    auto sizes = t.sizes();
    const auto nonzero = std::count_if(sizes.begin(), sizes.end(), [](auto s) { return s > 0; });
    if (nonzero <= 1) {
        out.recipe = node("R-TRIVIAL", t);
        return out;
    }
    std::string why;
    if (!type_may_exist(t, &why)) {
        out.frontier.push_back(t.to_string() + ": " + why);
        return out;
    }
    auto note = [&](const std::string& s) {
        if (out.frontier.size() < 12) out.frontier.push_back(s);
    };
    // Resolves children in order; returns false at the first failure.
    auto need = [&](const std::vector<TypeSpec>& types, std::vector<std::shared_ptr<const Recipe>>& kids,
                    const std::string& rule) {
        for (const auto& c : types) {
            auto sub = resolve(c, depth + 1);
            out.truncated |= sub.truncated;
            if (!sub.recipe) {
                note(rule + " for " + t.to_string() + " needs " + c.normalized().to_string());
                return false;
            }
            kids.push_back(sub.recipe);
        }
        return true;
    };

    if (const auto* e = catalog_.find_hsd(t)) {
        auto r = node("R-CAT", t);
        r->params = {{"id", e->id}};
        out.recipe = r;
        return out;
    }

    if (auto r = try_search(t)) {
        out.recipe = r;
        return out;
    }

    if (const auto* e = catalog_.find_gdd4(t)) {
        auto r = node("R-GDD1", t);
        r->params = {{"gdd", e->id}, {"weight", "1"}};
        if (need({TypeSpec::parse("1^4")}, r->children, "R-GDD1")) {
            out.recipe = r;
            return out;
        }
    }

    for (const auto& s : tdw_shapes(t)) {
        if (s.m < 5 || !td_exists(6, s.m) || !mols_of_order(s.m, 4)) continue;
        std::set<TypeSpec> ingredients;
        std::set<std::uint32_t> sixth;
        for (auto w : even_weights(s.m, s.u)) sixth.insert(w);
        for (std::uint32_t fifth : {0u, 3u}) {
            if (fifth == 0 && s.k == s.m) continue;
            if (fifth == 3 && s.k == 0) continue;
            for (auto w : sixth) {
                std::vector<std::uint32_t> sz{3, 3, 3, 3, fifth, w};
                ingredients.insert(TypeSpec::from_sizes(sz));
            }
        }
        auto r = node("R-TDW", t);
        r->params = {{"m", std::to_string(s.m)}, {"k", std::to_string(s.k)}, {"u", std::to_string(s.u)}};
        if (need({ingredients.begin(), ingredients.end()}, r->children, "R-TDW")) {
            out.recipe = r;
            return out;
        }
    }

    {
        std::uint32_t g = 0;
        for (auto s : sizes) g = std::gcd(g, s);
        for (std::uint32_t m = 3; m <= g; ++m) {
            if (g % m || m == 6 || !mols_of_order(m, 2)) continue;
            std::vector<std::uint32_t> base;
            for (auto s : sizes) base.push_back(s / m);
            auto bt = TypeSpec::from_sizes(base);
            if (!type_may_exist(bt)) continue;
            auto r = node("R-MUL", t);
            r->params = {{"m", std::to_string(m)}};
            if (need({bt}, r->children, "R-MUL")) {
                out.recipe = r;
                return out;
            }
        }
    }

    for (const auto& [h, N, W] : hole_family(t)) {
        for (std::uint32_t s = 2; s < N; ++s) {
            if (N % s || N / s < 4) continue;
            for (std::uint32_t v = 0; v <= W; ++v) {
                auto inner = type_of(h, s, v);
                auto outer = type_of(h * s, N / s, W - v);
                if (!type_may_exist(inner) || !type_may_exist(outer)) continue;
                auto r = node("R-FILL-A", t);
                r->params = {{"h", std::to_string(h)}, {"s", std::to_string(s)}, {"v", std::to_string(v)},
                             {"w", std::to_string(W - v)}};
                std::vector<std::shared_ptr<const Recipe>> kids;
                if (!need({inner, outer}, kids, "R-FILL-A")) continue;
                r->children = {kids[1], kids[0]};
                out.recipe = r;
                return out;
            }
        }
    }

    for (const auto& [h, N, W] : hole_family(t)) {
        for (std::uint32_t s = 2; 4 * s < N; ++s) {
            const auto tt = N - 4 * s;
            if (tt < 1 || tt > s) continue;
            for (std::uint32_t v = 0; v <= W; ++v) {
                auto inner_s = type_of(h, s, v);
                auto inner_t = type_of(h, tt, v);
                std::vector<std::uint32_t> osz{h * s, h * s, h * s, h * s, h * tt, W - v};
                auto outer = TypeSpec::from_sizes(osz);
                if (!type_may_exist(inner_s) || !type_may_exist(inner_t) || !type_may_exist(outer)) continue;
                auto r = node("R-FILL-B", t);
                r->params = {{"h", std::to_string(h)}, {"s", std::to_string(s)}, {"t", std::to_string(tt)},
                             {"v", std::to_string(v)}, {"w", std::to_string(W - v)}};
                std::vector<std::shared_ptr<const Recipe>> kids;
                if (!need({inner_s, inner_t, outer}, kids, "R-FILL-B")) continue;
                r->children = {kids[2], kids[0], kids[1]};
                out.recipe = r;
                return out;
            }
        }
    }

    {
        const auto& p = t.parts();
        if (p.size() == 2 && p[0].size == 9 && p[0].count == 9 && p[1].count == 1 && p[1].size >= 18 &&
            p[1].size <= 36 && p[1].size % 2 == 0) {
            const auto u = p[1].size;
            const auto fours = (u - 18) / 2;
            std::vector<TypeSpec> ingredients;
            if (fours < 9) ingredients.push_back(TypeSpec::parse("1^9 2^1"));
            if (fours > 0) ingredients.push_back(TypeSpec::parse("1^9 4^1"));
            auto r = node("R-9FAM", t);
            r->params = {{"td", "10,9"}, {"fours", std::to_string(fours)}};
            if (need(ingredients, r->children, "R-9FAM")) {
                out.recipe = r;
                return out;
            }
        }
    }

    {
        const auto& p = t.parts();
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i].size != 12 || p[i].count < 4) continue;
            bool shape = p.size() == 1 || (p.size() == 2 && p[1 - i].count == 1 && p[1 - i].size % 4 == 0);
            if (shape) note("R-FSOLS for " + t.to_string() + ": needs an FSOLS, not materializable here");
        }
    }
    if (out.frontier.empty()) note("no rule applies to " + t.to_string());
    return out;
}

ExistenceVerdict Prover::prove_type(const TypeSpec& target)
{
    const auto t = target.normalized();
    std::uint64_t n = 0, u = 0;
    if (three_shape(t, n, u)) return prove(n, u);

    ExistenceVerdict v;
    std::string why;
    if (!type_may_exist(t, &why)) {
        v.reason = "necessary condition fails: " + why;
        return v;
    }
    auto o = resolve(t, 0);
    if (!o.recipe) {
        v.reason = "no recipe";
        for (const auto& f : o.frontier) v.reason += "; " + f;
        return v;
    }
    v.kind = VerdictKind::Exists;
    v.recipe = o.recipe;
    if (opts_.mode == ProveMode::Materialize) {
        if (opts_.max_points && t.point_count() > opts_.max_points) {
            v.kind = VerdictKind::UnknownHere;
            v.reason = "recipe found but " + std::to_string(t.point_count()) + " points exceed the materialization cap of " +
                       std::to_string(opts_.max_points);
            return v;
        }
        v.design = materialize(*o.recipe);
    }
    return v;
}

ExistenceVerdict Prover::prove(std::uint64_t n, std::uint64_t u)
{
    auto f = is_feasible(n, u);
    if (!f.feasible) {
        ExistenceVerdict v;
        v.kind = VerdictKind::Infeasible;
        v.feasibility = f;
        v.reason = f.describe();
        return v;
    }
    auto t = type_of(3, n, static_cast<std::uint32_t>(u));
    auto o = resolve(t, 0);
    ExistenceVerdict v;
    v.feasibility = f;
    if (!o.recipe) {
        v.reason = "no recipe";
        for (const auto& fr : o.frontier) v.reason += "; " + fr;
        return v;
    }
    v.kind = VerdictKind::Exists;
    v.recipe = o.recipe;
    if (opts_.mode == ProveMode::Materialize) {
        if (opts_.max_points && t.point_count() > opts_.max_points) {
            v.kind = VerdictKind::UnknownHere;
            v.reason = "recipe found but " + std::to_string(t.point_count()) + " points exceed the materialization cap of " +
                       std::to_string(opts_.max_points);
            return v;
        }
        v.design = materialize(*o.recipe);
    }
    return v;
}

std::shared_ptr<const Design> Prover::materialize(const Recipe& r)
{
    if (auto it = built_.find(&r); it != built_.end()) return it->second;
    auto child = [&](std::size_t i) { return materialize(*r.children.at(i)); };
    auto supplier = [&](const TypeSpec& t) -> std::shared_ptr<const Design> {
        for (std::size_t i = 0; i < r.children.size(); ++i)
            if (r.children[i]->target == t) return child(i);
        return nullptr;
    };

    Design d;
    if (r.rule == "R-TRIVIAL")
        d = empty_design(r.target);
    else if (r.rule == "R-CAT")
        d = catalog_.get(r.param("id")).design();
    else if (r.rule == "R-SEARCH")
        d = *searched_design(r.target);
    else if (r.rule == "R-GDD1") {
        const auto& g = std::get<Gdd>(catalog_.get(r.param("gdd")).content);
        d = weight_inflate(g, WeightAssignment::uniform(g, 1), supplier);
    }
    else if (r.rule == "R-TDW") {
        const auto m = to_u32(r.param("m")), k = to_u32(r.param("k")), u = to_u32(r.param("u"));
        auto td = td_from_mols(*mols_of_order(m, 4));
        WeightAssignment w{std::vector<std::uint32_t>(6 * m, 0)};
        for (std::uint32_t x = 0; x < 4 * m; ++x) w.weights[x] = 3;
        for (std::uint32_t x = 0; x < k; ++x) w.weights[4 * m + x] = 3;
        auto sixth = even_weights(m, u);
        for (std::uint32_t x = 0; x < m; ++x) w.weights[5 * m + x] = sixth[x];
        d = weight_inflate(td.gdd, w, supplier);
    }
    else if (r.rule == "R-MUL")
        d = multiply(*child(0), to_u32(r.param("m")));
    else if (r.rule == "R-FILL-A") {
        FillParams p{to_u32(r.param("h")), to_u32(r.param("s")), 0, to_u32(r.param("v")), to_u32(r.param("w"))};
        d = fill_holes_a(*child(0), *child(1), p);
    }
    else if (r.rule == "R-FILL-B") {
        FillParams p{to_u32(r.param("h")), to_u32(r.param("s")), to_u32(r.param("t")), to_u32(r.param("v")),
                     to_u32(r.param("w"))};
        d = fill_holes_b(*child(0), *child(1), *child(2), p);
    }
    else if (r.rule == "R-9FAM") {
        const auto fours = to_u32(r.param("fours"));
        auto td = td_from_mols(*mols_of_order(9, 8));
        WeightAssignment w{std::vector<std::uint32_t>(90, 1)};
        for (std::uint32_t x = 0; x < 9; ++x) w.weights[81 + x] = x < fours ? 4 : 2;
        d = weight_inflate(td.gdd, w, supplier);
    }
    else
        throw UnsupportedError("rule " + r.rule + " cannot be materialized");

    auto report = verify_design(d);
    if (!report.pass) throw InconsistencyError(r.rule + " for " + r.target.to_string() + " failed: " + report.summary());
    if (!(d.holes.type() == r.target))
        throw InconsistencyError(r.rule + " built type " + d.holes.type().to_string() + ", expected " +
                                 r.target.to_string());
    auto built = std::make_shared<const Design>(std::move(d));
    built_.emplace(&r, built);
    return built;
}

std::string ExistenceTable::to_csv() const
{
    std::ostringstream out;
    out << "n,u,verdict,rule,blocks,certified\n";
    for (const auto& c : cells)
        out << c.n << ',' << c.u << ',' << hsd::to_string(c.kind) << ',' << c.rule << ',' << c.blocks << ','
            << (c.certified ? "yes" : "no") << '\n';
    return out.str();
}

std::string ExistenceTable::to_text() const
{
    std::ostringstream out;
    out << "n\\u";
    for (std::uint64_t u = 0; u <= u_max; ++u) out << std::setw(4) << u;
    out << '\n';
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        out << std::setw(3) << n;
        for (std::uint64_t u = 0; u <= u_max; ++u) {
            const auto& c = at(n, u);
            const char* mark = c.kind == VerdictKind::Infeasible ? "." : c.kind == VerdictKind::UnknownHere ? "?"
                               : c.certified                      ? "E*"
                                                                  : "E";
            out << std::setw(4) << mark;
        }
        out << '\n';
    }
    out << "E exists, E* exists and certified, . infeasible, ? unknown here\n";
    return out.str();
}

ExistenceTable existence_table(std::uint64_t n_max, std::uint64_t u_max, const ProverOptions& opts, int threads)
{
    ExistenceTable table{n_max, u_max, {}};
    table.cells.resize(n_max * (u_max + 1));
    const auto total = static_cast<std::int64_t>(table.cells.size());
    std::exception_ptr failure;
#ifdef _OPENMP
    const int workers = threads > 0 ? threads : omp_get_max_threads();
#else
    const int workers = 1;
#endif
    (void)workers;
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (std::int64_t i = 0; i < total; ++i) {
        try {
            // One prover per cell keeps each verdict independent of evaluation order.
            Prover prover(opts);
            const auto n = static_cast<std::uint64_t>(i) / (u_max + 1) + 1;
            const auto u = static_cast<std::uint64_t>(i) % (u_max + 1);
            auto v = prover.prove(n, u);
            TableCell c{n, u, v.kind, v.recipe ? v.recipe->rule : "", 0, false};
            if (v.design) {
                c.blocks = v.design->blocks.size();
                c.certified = true;
            }
            else if (v.feasibility && v.feasibility->expected_blocks && v.kind == VerdictKind::Exists)
                c.blocks = *v.feasibility->expected_blocks;
            table.cells[i] = c;
        }
        catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return table;
}

} // namespace hsd
