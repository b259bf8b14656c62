#include "properties.hpp"

#include "hsd/development.hpp"
#include "hsd/errors.hpp"
#include "hsd/quasigroup.hpp"
#include "hsd/verify.hpp"

#include <random>

namespace prop {

using namespace hsd;

namespace {

void fail(Result& r, const std::string& what)
{
    if (r.failures++ == 0) r.detail = what;
}

bool quasigroup_side(const Design& d)
{
    try {
        auto q = to_quasigroup(d);
        return check_latin_outside_holes(q).pass && check_schroder_identity(q).pass;
    }
    catch (const InconsistencyError&) {
        return false;
    }
}

bool develop_verifies(const StarterSet& s)
{
    try {
        return verify_design(develop(s)).pass;
    }
    catch (const InconsistencyError&) {
        return false;
    }
}

} // namespace

Result quasigroup_equivalence(const Catalog& c)
{
    Result r;
    for (const auto& e : c.entries()) {
        if (e.is_gdd()) continue;
        auto d = e.design();
        auto check = [&](const Design& x, const std::string& label) {
            ++r.cases;
            if (verify_design(x).pass != quasigroup_side(x)) fail(r, label);
        };
        check(d, e.id);
        auto round = from_quasigroup(to_quasigroup(d));
        round.canonicalize();
        if (round.blocks != d.blocks) fail(r, e.id + " round trip");
        if (!d.blocks.empty()) {
            d.blocks.pop_back();
            check(d, e.id + " minus one block");
        }
    }
    return r;
}

Result canonical_orbit_fuzz(std::size_t cases, std::uint64_t seed)
{
    Result r;
    std::mt19937_64 rng(seed);
    auto pick = [&](std::uint32_t lo, std::uint32_t hi) {
        return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
    };
    for (std::size_t i = 0; i < cases; ++i) {
        ++r.cases;
        StarterSet s;
        s.h = pick(1, 4);
        s.n = pick(4, 9);
        s.u = pick(0, 3);
        std::vector<std::uint32_t> divisors;
        for (std::uint32_t k = 1; k <= s.modulus(); ++k)
            if (s.modulus() % k == 0) divisors.push_back(k);
        s.step = divisors[pick(0, static_cast<std::uint32_t>(divisors.size() - 1))];

        // Four points in distinct holes, at most one infinite.
        Block b;
        std::vector<std::uint32_t> holes;
        for (int k = 0; k < 4; ++k) {
            std::uint32_t hole;
            do hole = pick(0, s.n - 1 + (s.u > 0 ? 1 : 0));
            while (std::find(holes.begin(), holes.end(), hole) != holes.end());
            holes.push_back(hole);
            b.pts[k] = hole == s.n ? Point::infinite(pick(1, s.u)) : Point::finite(hole + s.n * pick(0, s.h - 1));
        }
        auto label = "case " + std::to_string(i) + " " + b.to_string();

        auto canon = b.canonical();
        if (canon.canonical() != canon) fail(r, label + " not idempotent");
        for (const auto& f : b.equivalent_forms())
            if (f.canonical() != canon) fail(r, label + " canonical differs across forms");

        const auto order = s.group_order();
        auto orbit = orbit_of(b, s);
        if (orbit.length == 0 || order % orbit.length != 0) fail(r, label + " orbit length does not divide g/k");
        bool fixed = false;
        for (std::uint32_t j = s.step; j < s.modulus() && !fixed; j += s.step)
            fixed = shift_block(b, j, s.modulus()).canonical() == canon;
        if (fixed != (orbit.length < order)) fail(r, label + " short orbit mismatch");
    }
    return r;
}

Result census_equivalence(const Catalog& c)
{
    Result r;
    for (const auto& e : c.entries()) {
        if (!e.is_starter()) continue;
        const auto& s = std::get<StarterSet>(e.content);
        if (s.step != 1) continue;
        auto check = [&](const StarterSet& x, const std::string& label) {
            ++r.cases;
            if (difference_census(x).pass != develop_verifies(x)) fail(r, label);
        };
        check(s, e.id);
        auto bad = s;
        std::swap(bad.starters[0].pts[2], bad.starters[0].pts[3]);
        check(bad, e.id + " perturbed");
    }
    return r;
}

} // namespace prop
