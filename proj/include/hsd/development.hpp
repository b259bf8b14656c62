#pragma once

#include "hsd/block.hpp"
#include "hsd/design.hpp"
#include "hsd/type_spec.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hsd {

/// Starter blocks over Z_g and x1..xu with holes H_i = {i, i+n, ..., i+(h-1)n} and {x1..xu}.
struct StarterSet {
    std::uint32_t h = 0;
    std::uint32_t n = 0;
    std::uint32_t step = 1;
    std::uint32_t u = 0;
    std::vector<Block> starters;
    /// Indices of starters the source marks as short orbits (consistency check only).
    std::vector<std::size_t> marked_short;

    std::uint32_t modulus() const { return h * n; }
    std::uint32_t group_order() const { return modulus() / step; }
    PointSpace space() const { return PointSpace{modulus(), u}; }
    TypeSpec type() const;
    HoleStructure holes() const;
    /// Hole index of a point: i for finite points, n for infinite points.
    std::uint32_t hole_of(Point p) const { return p.is_finite() ? p.index() % n : n; }

    /// Throws InconsistencyError if a parameter or starter is malformed.
    void validate() const;
};

struct Orbit {
    Block representative;
    std::uint32_t length = 0;
    std::vector<Block> blocks;
};

Block shift_block(const Block& b, std::uint32_t j, std::uint32_t g);
Orbit orbit_of(const Block& b, const StarterSet& s);

struct DevelopOptions {
    /// Merge duplicate blocks across starters instead of throwing.
    bool allow_duplicates = false;
};

/// All orbits merged, canonical and sorted. Throws InconsistencyError on cross-starter duplicates.
Design develop(const StarterSet& s, DevelopOptions opts = {});
/// Orbit lengths in starter order.
std::vector<std::uint32_t> orbit_lengths(const StarterSet& s);

namespace serial {
Design develop(const StarterSet& s, DevelopOptions opts = {});
}

struct CensusMismatch {
    int color = 0;                   // 0 for infinite-point coverage
    std::uint32_t value = 0;         // difference, or infinite label
    std::uint64_t observed = 0;      // weighted by orbit length
    std::uint64_t expected = 0;
};

struct CensusReport {
    bool pass = false;
    std::vector<CensusMismatch> mismatches;
    std::string summary() const;
};

/// Step-1 difference check: each color's +-(x-y) cover Z_g minus hole differences once.
/// Throws UnsupportedError for step != 1.
CensusReport difference_census(const StarterSet& s);

StarterSet read_starter(std::istream& in);
StarterSet read_starter_file(const std::string& path);
StarterSet parse_starter(const std::string& text);
void write_starter(std::ostream& out, const StarterSet& s);
std::string format_starter(const StarterSet& s);

} // namespace hsd
