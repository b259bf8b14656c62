#include <doctest.h>

#include "hsd/catalog.hpp"
#include "hsd/errors.hpp"
#include "hsd/finite_field.hpp"
#include "hsd/gdd.hpp"
#include "hsd/latin.hpp"

using namespace hsd;

TEST_CASE("finite fields")
{
    auto f5 = gf(5);
    CHECK(f5.order() == 5);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.mul(3, 4) == 2);
    CHECK(f5.inv(2) == 3);
    CHECK(f5.check_axioms());

    auto f8 = gf(8);
    CHECK(f8.characteristic() == 2);
    CHECK(f8.degree() == 3);
    CHECK(f8.modulus() == std::vector<std::uint32_t>{1, 1, 0});
    // x * x^2 = x^3 = x + 1
    CHECK(f8.mul(2, 4) == 3);
    CHECK(f8.check_axioms());

    for (std::uint32_t q = 2; q <= 64; ++q)
        if (is_prime_power(q)) CHECK_MESSAGE(gf(q).check_axioms(), q);
        else CHECK_THROWS_AS(gf(q), UnsupportedError);
    CHECK_THROWS_AS(gf(6), UnsupportedError);
    CHECK_THROWS_AS(gf(128), UnsupportedError);
}

TEST_CASE("MOLS from prime powers")
{
    auto m5 = mols_prime_power(gf(5), 4);
    CHECK(m5.squares.size() == 4);
    CHECK(m5.check());
    auto m8 = mols_prime_power(gf(8), 2);
    CHECK(m8.order == 8);
    CHECK(m8.check());
    CHECK_THROWS(mols_prime_power(gf(3), 3));
}

TEST_CASE("Kronecker products")
{
    auto a = mols_prime_power(gf(3), 2);
    auto p9 = mols_kronecker(a, a);
    CHECK(p9.order == 9);
    CHECK(p9.squares.size() == 2);
    CHECK(p9.check());

    MOLSSet one{1, {LatinSquare{1, {0}}, LatinSquare{1, {0}}}};
    auto same = mols_kronecker(a, one);
    CHECK(same.order == 3);
    CHECK(same.check());

    auto p12 = mols_kronecker(mols_prime_power(gf(4), 2), a);
    CHECK(p12.order == 12);
    CHECK(p12.check());

    CHECK_FALSE(mols_of_order(6, 2).has_value());
    CHECK_FALSE(mols_of_order(2, 2).has_value());
    auto m12 = mols_of_order(12, 2);
    REQUIRE(m12.has_value());
    CHECK(m12->check());
}

TEST_CASE("non-orthogonal pair")
{
    LatinSquare z4{4, {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2}};
    CHECK(z4.is_latin());
    CHECK_FALSE(are_orthogonal(z4, z4));
}

TEST_CASE("transversal designs")
{
    auto td65 = td_from_mols(mols_prime_power(gf(5), 4));
    CHECK(td65.k == 6);
    CHECK(td65.gdd.blocks.size() == 25);
    CHECK(verify_gdd(td65.gdd).pass);

    auto td33 = td_from_mols(mols_prime_power(gf(3), 1));
    CHECK(td33.gdd.blocks.size() == 9);
    CHECK(verify_gdd(td33.gdd).pass);

    auto td68 = td_from_mols(mols_prime_power(gf(8), 4));
    CHECK(td68.gdd.blocks.size() == 64);
    CHECK(verify_gdd(td68.gdd).pass);

    CHECK_FALSE(td_exists(6, 6));
    CHECK(td_exists(6, 7));
    CHECK(td_exists(6, 5));
}

TEST_CASE("GDD checks")
{
    auto td43 = td_from_mols(mols_prime_power(gf(3), 2));
    CHECK(verify_gdd(td43.gdd).pass);
    CHECK(td43.gdd.type() == TypeSpec::parse("3^4"));

    auto g = td43.gdd;
    g.blocks.pop_back();
    auto r = verify_gdd(g);
    CHECK_FALSE(r.pass);
    CHECK(r.violation_count == 6);

    auto text = format_gdd(td43.gdd);
    CHECK(format_gdd(parse_gdd(text)) == text);
    CHECK_THROWS_AS(parse_gdd("garbage\n"), ParseError);
}

TEST_CASE("embedded 4-GDD 3^8 6^1")
{
    const auto* e = Catalog::embedded().find_gdd4(TypeSpec::parse("3^8 6^1"));
    REQUIRE(e != nullptr);
    const auto& g = std::get<Gdd>(e->content);
    CHECK(verify_gdd(g).pass);
    CHECK(g.block_sizes() == std::set<std::size_t>{4});
}
