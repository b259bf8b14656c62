#include <doctest.h>

#include "hsd/development.hpp"
#include "hsd/errors.hpp"
#include "hsd/exact_cover.hpp"
#include "hsd/search.hpp"
#include "hsd/verify.hpp"

#include <sstream>

using namespace hsd;

namespace {

SearchBudget budget(double seconds, int threads = 0)
{
    SearchBudget b;
    b.seconds = seconds;
    b.threads = threads;
    return b;
}

} // namespace

TEST_CASE("exact cover basics")
{
    // Knuth's example: rows {2,4}, {0,3,6}, {1,2,5}, {0,3,5}, {1,6}, {3,4,6}.
    ExactCover ec(7);
    ec.add_row({2, 4});
    ec.add_row({0, 3, 6});
    ec.add_row({1, 2, 5});
    ec.add_row({0, 3, 5});
    ec.add_row({1, 6});
    ec.add_row({3, 4, 6});
    auto r = ec.solve(budget(10));
    REQUIRE(r.status == SearchStatus::Found);
    std::vector<int> hit(7, 0);
    for (auto row : r.rows)
        for (auto i : ec.row(row)) ++hit[i];
    CHECK(hit == std::vector<int>(7, 1));

    ExactCover none(3);
    none.add_row({0, 1});
    none.add_row({1, 2});
    CHECK(none.solve(budget(10)).status == SearchStatus::None);
}

TEST_CASE("exact cover result does not depend on thread count")
{
    ExactCover ec(12);
    for (std::uint32_t a = 0; a < 12; ++a)
        for (std::uint32_t b = a + 1; b < 12; ++b)
            if ((a + b) % 3 != 0) ec.add_row({a, b});
    auto one = ec.solve(budget(10, 1));
    auto many = ec.solve(budget(10, 4));
    CHECK(one.status == many.status);
    CHECK(one.rows == many.rows);
}

TEST_CASE("node limit gives timeout")
{
    SearchBudget b;
    b.node_limit = 5;
    auto r = search_direct(TypeSpec::parse("3^4 2^1"), b);
    CHECK(r.status == SearchStatus::Timeout);
    CHECK_FALSE(r.value.has_value());
}

TEST_CASE("direct search small cases")
{
    auto r4 = search_direct(TypeSpec::parse("1^4"), budget(60));
    REQUIRE(r4.status == SearchStatus::Found);
    CHECK(r4.value->blocks.size() == 3);
    CHECK(verify_design(*r4.value).pass);

    CHECK(search_direct(TypeSpec::parse("1^5"), budget(300)).status == SearchStatus::None);
    CHECK(search_direct(TypeSpec::parse("3^3 1^1"), budget(300)).status == SearchStatus::None);

    for (const char* t : {"3^4", "3^4 1^1"}) {
        auto r = search_direct(TypeSpec::parse(t), budget(120));
        REQUIRE_MESSAGE(r.status == SearchStatus::Found, t);
        CHECK(verify_design(*r.value).pass);
        CHECK(r.value->holes.type() == TypeSpec::parse(t));
    }
}

TEST_CASE("direct search proof log")
{
    std::ostringstream log;
    auto r = search_direct(TypeSpec::parse("1^5"), budget(60), &log);
    CHECK(r.status == SearchStatus::None);
    CHECK_FALSE(log.str().empty());
}

TEST_CASE("starter search")
{
    auto r = search_starters(TypeSpec::parse("3^7 1^1"), 1, budget(60));
    REQUIRE(r.status == SearchStatus::Found);
    auto d = develop(r.value.value());
    CHECK(d.blocks.size() == 105);
    CHECK(verify_design(d).pass);

    auto r2 = search_starters(3, 8, 2, 2, budget(60));
    REQUIRE(r2.status == SearchStatus::Found);
    CHECK(verify_design(develop(*r2.value)).pass);

    CHECK(search_starters(3, 3, 1, 1, budget(60)).status == SearchStatus::None);
}

TEST_CASE("starter search with short orbits")
{
    auto r = search_starters(3, 8, 1, 4, budget(60));
    REQUIRE(r.status == SearchStatus::Found);
    auto d = develop(*r.value);
    CHECK(d.blocks.size() == 138);
    CHECK(verify_design(d).pass);
}

TEST_CASE("cyclic GDD search")
{
    auto r = search_gdd(1, 13, 0, 1, budget(30));
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(verify_gdd(*r.value).pass);
    CHECK(r.value->blocks.size() == 13);

    CHECK(search_gdd(3, 4, 0, 1, budget(30)).status == SearchStatus::None);

    auto rot = search_gdd(3, 8, 9, 2, budget(60), 3);
    REQUIRE(rot.status == SearchStatus::Found);
    CHECK(verify_gdd(*rot.value).pass);
    CHECK(rot.value->type() == TypeSpec::parse("3^8 9^1"));

    CHECK_THROWS_AS(search_gdd(3, 8, 9, 2, budget(1), 2), UnsupportedError);
}

TEST_CASE("cyclic shapes")
{
    std::uint32_t h = 0, n = 0, u = 0;
    CHECK(cyclic_shape(TypeSpec::parse("3^8 2^1"), h, n, u));
    CHECK((h == 3 && n == 8 && u == 2));
    CHECK(cyclic_shape(TypeSpec::parse("1^13"), h, n, u));
    CHECK((h == 1 && n == 13 && u == 0));
    CHECK_FALSE(cyclic_shape(TypeSpec::parse("3^4 2^1 1^1"), h, n, u));
}
