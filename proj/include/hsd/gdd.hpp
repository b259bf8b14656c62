#pragma once

#include "hsd/latin.hpp"
#include "hsd/point.hpp"
#include "hsd/type_spec.hpp"

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace hsd {

/// Group divisible design; groups partition the points.
struct Gdd {
    PointSpace space;
    std::vector<std::vector<Point>> groups;
    std::vector<std::vector<Point>> blocks;
    std::uint32_t lambda = 1;

    TypeSpec type() const;
    std::set<std::size_t> block_sizes() const;
};

struct GddViolation {
    enum class Kind { GroupOverlap, PointNotInGroup, UnknownPoint, BlockMeetsGroupTwice, PairCount };
    Kind kind;
    Point p{};
    Point q{};
    std::size_t block = 0;
    std::uint32_t count = 0;
    std::string to_string() const;
};

struct GddReport {
    bool pass = false;
    std::size_t violation_count = 0;
    std::vector<GddViolation> violations; // capped like VerificationReport
    std::string summary() const;
};

GddReport verify_gdd(const Gdd& g);

struct TransversalDesign {
    std::uint32_t k = 0;
    std::uint32_t m = 0;
    Gdd gdd; // point (group i, value x) has index i*m + x
};

/// TD(k,m) from k-2 MOLS of order m.
TransversalDesign td_from_mols(const MOLSSet& ms);
/// Known-here existence of TD(k,m); false means unknown.
bool td_exists(std::uint32_t k, std::uint32_t m);

Gdd read_gdd(std::istream& in);
Gdd parse_gdd(const std::string& text);
Gdd load_gdd(const std::string& path);
void write_gdd(std::ostream& out, const Gdd& g);
std::string format_gdd(const Gdd& g);

} // namespace hsd
