#include <doctest.h>

#include "hsd/block.hpp"
#include "hsd/catalog.hpp"
#include "hsd/design.hpp"
#include "hsd/errors.hpp"
#include "hsd/feasibility.hpp"
#include "hsd/quasigroup.hpp"
#include "hsd/type_spec.hpp"
#include "hsd/verify.hpp"

#include <algorithm>

using namespace hsd;

namespace {

Point P(std::uint32_t i) { return Point::finite(i); }
Point X(std::uint32_t i) { return Point::infinite(i); }

Design catalog_design(const std::string& id) { return Catalog::embedded().get(id).design(); }

} // namespace

TEST_CASE("type spec parsing")
{
    auto t = TypeSpec::parse("3^8 2^1");
    CHECK(t.parts() == std::vector<TypePart>{{3, 8}, {2, 1}});
    CHECK(t.point_count() == 26);
    CHECK(TypeSpec::parse("1^1").point_count() == 1);
    CHECK(TypeSpec::parse("9^4 13^1").point_count() == 49);
    CHECK(TypeSpec::parse("3^4 4^1") == TypeSpec::parse("4^1 3^4"));
    CHECK_THROWS_AS(TypeSpec::parse("3^"), ParseError);
    CHECK_THROWS_AS(TypeSpec::parse("a^2"), ParseError);
}

TEST_CASE("feasibility")
{
    CHECK(is_feasible(7, 1).feasible);
    CHECK_FALSE(is_feasible(9, 1).feasible);
    CHECK_FALSE(is_feasible(9, 1).congruence_ok);
    CHECK_FALSE(is_feasible(4, 5).feasible);
    CHECK_FALSE(is_feasible(4, 5).bound_ok);
    for (std::uint64_t u = 0; u <= 30; ++u) CHECK_FALSE(is_feasible(6, u).feasible);
    CHECK(is_feasible(8, 2).describe() == "feasible, expected 150 blocks");
    CHECK(is_feasible(9, 1).describe() == "infeasible: congruence");
    for (std::uint64_t n = 1; n < 40; ++n)
        for (std::uint64_t u = 0; u < 40; ++u) {
            auto r = is_feasible(n, u);
            CHECK(r.expected_blocks.has_value() == r.congruence_ok);
        }
}

TEST_CASE("expected block counts")
{
    CHECK(expected_block_count(TypeSpec::parse("3^7 1^1")) == 105);
    CHECK(expected_block_count(TypeSpec::parse("3^8 2^1")) == 150);
    CHECK(expected_block_count(TypeSpec::parse("3^8 1^1")) == 138);
    CHECK(expected_block_count(TypeSpec::parse("4^22 34^1")) == (122 * 121 / 2 - 22 * 6 - 34 * 33 / 2) / 2);
    CHECK_THROWS_AS(expected_block_count(TypeSpec::parse("1^6")), InfeasibleTypeError);
}

TEST_CASE("block pair colors")
{
    auto b = make_block(P(0), P(1), P(5), X(1));
    auto pairs = b.pairs();
    auto has = [&](Point p, Point q, int c) {
        if (q < p) std::swap(p, q);
        return std::find(pairs.begin(), pairs.end(), ColoredPair{p, q, c}) != pairs.end();
    };
    CHECK(has(P(0), P(1), 1));
    CHECK(has(P(5), X(1), 1));
    CHECK(has(P(0), P(5), 2));
    CHECK(has(P(1), X(1), 2));
    CHECK(has(P(0), X(1), 3));
    CHECK(has(P(1), P(5), 3));

    auto c = make_block(P(0), P(12), P(3), P(15));
    auto cp = c.pairs();
    CHECK(std::count(cp.begin(), cp.end(), ColoredPair{P(0), P(12), 1}) == 1);
    CHECK(std::count(cp.begin(), cp.end(), ColoredPair{P(3), P(15), 1}) == 1);
}

TEST_CASE("equivalent forms share pairs and canonical form")
{
    auto b = make_block(P(7), P(2), X(1), P(4));
    auto canon = b.canonical();
    auto sorted_pairs = [](const Block& x) {
        auto p = x.pairs();
        std::sort(p.begin(), p.end());
        return p;
    };
    for (const auto& f : b.equivalent_forms()) {
        CHECK(f.canonical() == canon);
        CHECK(sorted_pairs(f) == sorted_pairs(b));
    }
    CHECK(canon.canonical() == canon);
    CHECK(make_block(P(1), P(1), P(2), P(3)).has_repeated_point());
}

TEST_CASE("verify Ex2.1")
{
    auto d = catalog_design("Ex2.1");
    auto r = verify_design(d);
    CHECK(r.pass);
    CHECK(r.block_count == 105);

    d.blocks.pop_back();
    auto bad = verify_design(d);
    CHECK_FALSE(bad.pass);
    CHECK(bad.count(Violation::Kind::MissingPair) == 6);
}

TEST_CASE("verify detects structural faults")
{
    auto d = catalog_design("Ex2.1");
    auto dup = d;
    dup.blocks.push_back(dup.blocks.front());
    CHECK(verify_design(dup).count(Violation::Kind::DuplicatePair) == 6);

    auto rep = d;
    rep.blocks[0].pts[1] = rep.blocks[0].pts[0];
    CHECK(verify_design(rep).count(Violation::Kind::RepeatedPoint) >= 1);

    auto unknown = d;
    unknown.blocks[0].pts[0] = P(999);
    CHECK(verify_design(unknown).count(Violation::Kind::UnknownPoint) >= 1);

    auto mistyped = d;
    mistyped.declared_type = TypeSpec::parse("3^7 2^1");
    CHECK(verify_design(mistyped).count(Violation::Kind::TypeMismatch) == 1);
}

TEST_CASE("verify D/4^19 30^1")
{
    auto d = catalog_design("D/4^19 30^1");
    auto r = verify_design(d);
    CHECK(r.pass);
    CHECK(r.block_count == expected_block_count(TypeSpec::parse("4^19 30^1")));
}

TEST_CASE("parallel and serial verification agree")
{
    auto d = catalog_design("A1/3^8 1^1");
    auto bad = d;
    bad.blocks.erase(bad.blocks.begin() + 5);
    bad.blocks.push_back(bad.blocks.front());
    for (const auto* x : {&d, &bad}) {
        auto a = verify_design(*x), b = serial::verify_design(*x);
        CHECK(a.pass == b.pass);
        CHECK(a.violation_count == b.violation_count);
        CHECK(a.totals == b.totals);
    }
}

TEST_CASE("design text round trip")
{
    auto d = catalog_design("Ex2.2");
    auto text = format_design(d);
    auto back = parse_design(text);
    CHECK(format_design(back) == text);
    CHECK(verify_design(back).pass);
}

TEST_CASE("quasigroup of HSD(1^4)")
{
    auto d = catalog_design("derived/1^4");
    REQUIRE(d.blocks.size() == 3);
    auto q = to_quasigroup(d);
    CHECK(q.order() == 4);
    for (std::size_t x = 0; x < 4; ++x) {
        CHECK(q.at(x, x) == static_cast<std::int32_t>(x));
        for (std::size_t y = 0; y < 4; ++y) CHECK(q.at(x, y) != QuasigroupTable::kUndefined);
    }
    CHECK(check_schroder_identity(q).pass);
    CHECK(check_latin_outside_holes(q).pass);
    auto back = from_quasigroup(q);
    back.canonicalize();
    d.canonicalize();
    CHECK(back.blocks == d.blocks);
}

TEST_CASE("quasigroup of Ex2.2 has undefined hole squares")
{
    auto d = catalog_design("Ex2.2");
    auto q = to_quasigroup(d);
    std::size_t undefined = 0;
    for (std::size_t x = 0; x < q.order(); ++x)
        for (std::size_t y = 0; y < q.order(); ++y) {
            bool same = q.hole_of(x) == q.hole_of(y);
            CHECK((q.at(x, y) == QuasigroupTable::kUndefined) == same);
            undefined += same;
        }
    CHECK(undefined == 8 * 9 + 4);
}

TEST_CASE("conflicting blocks are inconsistent")
{
    auto d = empty_design(TypeSpec::parse("1^8"));
    d.blocks.push_back(make_block(P(0), P(1), P(2), P(3)));
    d.blocks.push_back(make_block(P(0), P(1), P(4), P(5)));
    CHECK_THROWS_AS(to_quasigroup(d), InconsistencyError);
}

TEST_CASE("Z_4 addition violates the Schroder identity")
{
    QuasigroupTable q(PointSpace{4, 0}, HoleStructure{{{P(0)}, {P(1)}, {P(2)}, {P(3)}}});
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) q.set(x, y, static_cast<std::int32_t>((x + y) % 4));
    CHECK_FALSE(check_schroder_identity(q).pass);
    CHECK_THROWS_AS(from_quasigroup(q), InconsistencyError);

    QuasigroupTable one(PointSpace{1, 0}, HoleStructure{{{P(0)}}});
    one.set(0, 0, 0);
    CHECK(check_schroder_identity(one).pass);
}

TEST_CASE("Weisner pairs")
{
    auto q = to_quasigroup(catalog_design("derived/1^4"));
    auto l = to_latin_square(q);
    CHECK(check_weisner_pair(l, l.transpose()).pass);

    LatinSquare one{1, {0}};
    CHECK(check_weisner_pair(one, one).pass);

    LatinSquare a{4, {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2}};
    CHECK_FALSE(check_weisner_pair(a, a).pass);
}
