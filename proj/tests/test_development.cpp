#include <doctest.h>

#include "hsd/catalog.hpp"
#include "hsd/development.hpp"
#include "hsd/errors.hpp"
#include "hsd/verify.hpp"

#include <map>

using namespace hsd;

namespace {

Point P(std::uint32_t i) { return Point::finite(i); }
Point X(std::uint32_t i) { return Point::infinite(i); }

const StarterSet& starter(const std::string& id) { return std::get<StarterSet>(Catalog::embedded().get(id).content); }

std::map<std::uint32_t, int> length_histogram(const StarterSet& s)
{
    std::map<std::uint32_t, int> h;
    for (auto l : orbit_lengths(s)) ++h[l];
    return h;
}

} // namespace

TEST_CASE("shift_block")
{
    CHECK(shift_block(make_block(P(0), P(12), P(3), P(15)), 12, 24) == make_block(P(12), P(0), P(15), P(3)));
    CHECK(shift_block(make_block(P(0), P(1), P(5), X(1)), 0, 21) == make_block(P(0), P(1), P(5), X(1)));
    CHECK(shift_block(make_block(P(0), P(3), P(21), X(1)), 4, 24) == make_block(P(4), P(7), P(1), X(1)));
}

TEST_CASE("orbit lengths")
{
    StarterSet ex22{3, 8, 2, 2, {}, {}};
    CHECK(orbit_of(make_block(P(0), P(12), P(3), P(15)), ex22).length == 6);
    StarterSet ex21{3, 7, 1, 1, {}, {}};
    CHECK(orbit_of(make_block(P(0), P(1), P(5), X(1)), ex21).length == 21);
    StarterSet a1{3, 8, 4, 1, {}, {}};
    CHECK(orbit_of(make_block(P(0), P(12), P(17), P(5)), a1).length == 3);
}

TEST_CASE("Ex2.1 develops to 105 blocks")
{
    const auto& s = starter("Ex2.1");
    CHECK(s.starters.size() == 5);
    CHECK(s.step == 1);
    CHECK(s.modulus() == 21);
    auto d = develop(s);
    CHECK(d.blocks.size() == 105);
    CHECK(verify_design(d).pass);
}

TEST_CASE("Ex2.2 develops to 150 blocks with three short orbits")
{
    const auto& s = starter("Ex2.2");
    auto d = develop(s);
    CHECK(d.blocks.size() == 150);
    CHECK(verify_design(d).pass);
    CHECK(length_histogram(s) == std::map<std::uint32_t, int>{{6, 3}, {12, 11}});
}

TEST_CASE("A1 3^8 1^1 develops to 138 blocks")
{
    const auto& s = starter("A1/3^8 1^1");
    CHECK(s.step == 4);
    auto d = develop(s);
    CHECK(d.blocks.size() == 138);
    CHECK(verify_design(d).pass);
    CHECK(length_histogram(s) == std::map<std::uint32_t, int>{{3, 6}, {6, 20}});
}

TEST_CASE("catalog starter counts")
{
    const auto& l316 = starter("L3.16/3^13 16^1");
    CHECK(l316.starters.size() == 17);
    CHECK(l316.step == 1);
    CHECK(l316.modulus() == 39);
    CHECK(verify_design(develop(l316)).pass);

    const std::map<std::string, std::size_t> counts{
        {"D/4^19 30^1", 2508}, {"D/4^19 31^1", 2546}, {"D/4^19 33^1", 2622},
        {"D/4^19 34^1", 2660}, {"D/4^19 35^1", 2698}, {"D/4^22 34^1", 3344},
    };
    for (const auto& [id, n] : counts) {
        auto d = develop(starter(id));
        CHECK_MESSAGE(d.blocks.size() == n, id);
        CHECK_MESSAGE(verify_design(d).pass, id);
    }
}

TEST_CASE("develop is deterministic and matches the serial path")
{
    const auto& s = starter("A2/3^13 2^1");
    auto a = develop(s), b = develop(s), c = serial::develop(s);
    CHECK(a.blocks == b.blocks);
    CHECK(a.blocks == c.blocks);
}

TEST_CASE("duplicate starters")
{
    auto s = starter("Ex2.1");
    s.starters.push_back(shift_block(s.starters.front(), 3, s.modulus()));
    CHECK_THROWS_AS(develop(s), InconsistencyError);
    auto merged = develop(s, DevelopOptions{true});
    CHECK(merged.blocks.size() == 105);
}

TEST_CASE("difference census")
{
    CHECK(difference_census(starter("Ex2.1")).pass);
    CHECK(difference_census(starter("A2/3^9 2^1")).pass);

    auto s = starter("Ex2.1");
    std::swap(s.starters[0].pts[2], s.starters[0].pts[3]);
    auto r = difference_census(s);
    CHECK_FALSE(r.pass);
    bool color1 = false, color23 = false;
    for (const auto& m : r.mismatches) {
        color1 |= m.color == 1;
        color23 |= m.color == 2 || m.color == 3;
    }
    CHECK_FALSE(color1);
    CHECK(color23);

    CHECK_THROWS_AS(difference_census(starter("Ex2.2")), UnsupportedError);
}

TEST_CASE("starter text round trip")
{
    const auto& s = starter("A4/3^8 5^1");
    auto text = format_starter(s);
    auto back = parse_starter(text);
    CHECK(format_starter(back) == text);
    CHECK(back.marked_short == s.marked_short);
    CHECK(develop(back).blocks == develop(s).blocks);
}

TEST_CASE("malformed starters are rejected")
{
    CHECK_THROWS_AS(parse_starter("hsd-starter v1\ntype: 3^7 1^1\nmodulus: 21\nstep: 1\ninfinite: 1\nstarter: 0 1 q5 x1\n"), ParseError);
    CHECK_THROWS_AS(parse_starter("not a starter file\n"), ParseError);
    StarterSet s{3, 7, 2, 1, {}, {}};
    CHECK_THROWS_AS(s.validate(), InconsistencyError);
}
