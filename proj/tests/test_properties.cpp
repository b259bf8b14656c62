#include <doctest.h>

#include "properties.hpp"

#include "hsd/catalog.hpp"

using namespace hsd;

TEST_CASE("verifier and quasigroup checks agree on the catalog")
{
    auto r = prop::quasigroup_equivalence(Catalog::embedded());
    CHECK_MESSAGE(r.failures == 0, r.detail);
    CHECK(r.cases > 0);
}

TEST_CASE("canonicalization and orbit fuzz")
{
    auto r = prop::canonical_orbit_fuzz(10000, 20261017);
    CHECK_MESSAGE(r.failures == 0, r.detail);
    CHECK(r.cases == 10000);
}

TEST_CASE("difference census agrees with develop and verify")
{
    auto r = prop::census_equivalence(Catalog::embedded());
    CHECK_MESSAGE(r.failures == 0, r.detail);
    CHECK(r.cases > 0);
}
