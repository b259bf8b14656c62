#pragma once

#include "hsd/catalog.hpp"

#include <cstdint>
#include <string>

namespace prop {

struct Result {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string detail; // first failure
};

/// verify_design PASS iff the quasigroup side (table builds, Latin outside holes, Schroder identity)
/// passes; checked on every HSD entry and on a one-block-deleted copy of each.
Result quasigroup_equivalence(const hsd::Catalog& c);

/// Random blocks and starter sets: canonical form idempotent and constant on equivalence
/// classes, orbit length divides g/step and is short exactly when a shift fixes the block.
Result canonical_orbit_fuzz(std::size_t cases, std::uint64_t seed);

/// difference_census PASS iff develop+verify PASS over step-1 starter entries and a perturbed
/// copy of each.
Result census_equivalence(const hsd::Catalog& c);

} // namespace prop
