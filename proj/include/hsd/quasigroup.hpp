#pragma once

#include "hsd/design.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hsd {

struct LatinSquare;

/// Partial multiplication table over the points of a design. Cells inside a hole
/// are undefined, except the diagonal of size-1 holes (idempotent).
class QuasigroupTable {
public:
    static constexpr std::int32_t kUndefined = -1;

    QuasigroupTable() = default;
    QuasigroupTable(PointSpace space, HoleStructure holes);

    std::size_t order() const { return space_.size(); }
    const PointSpace& space() const { return space_; }
    const HoleStructure& holes() const { return holes_; }
    std::int32_t hole_of(std::size_t x) const { return hole_of_[x]; }

    /// Dense ids; kUndefined when empty.
    std::int32_t at(std::size_t x, std::size_t y) const { return cells_[x * order() + y]; }
    void set(std::size_t x, std::size_t y, std::int32_t v) { cells_[x * order() + y] = v; }
    /// Whether (x,y) should be defined: distinct holes, or the diagonal of a size-1 hole.
    bool should_define(std::size_t x, std::size_t y) const;

    std::string to_string() const;

private:
    PointSpace space_;
    HoleStructure holes_;
    std::vector<std::int32_t> hole_of_;
    std::vector<std::size_t> hole_size_;
    std::vector<std::int32_t> cells_;
};

struct CellIssue {
    std::size_t x;
    std::size_t y;
    std::string what;
};

struct QuasigroupReport {
    bool pass = true;
    std::vector<CellIssue> issues;
    std::string summary() const;
};

/// a.b = c, b.a = d, c.d = a, d.c = b for each block [a,b,c,d]. Throws InconsistencyError on conflict.
QuasigroupTable to_quasigroup(const Design& d);
/// Inverse of to_quasigroup. Throws InconsistencyError naming a cell that breaks the identity.
Design from_quasigroup(const QuasigroupTable& q);

/// All cross-hole (x,y) with (x*y)*(y*x) != x.
QuasigroupReport check_schroder_identity(const QuasigroupTable& q);
/// Every row and column is a bijection between its defined cells and the allowed symbols.
QuasigroupReport check_latin_outside_holes(const QuasigroupTable& q);

/// Whether L1(x,y)=z and L2(x,y)=w imply L1(z,w)=x and L2(z,w)=y.
QuasigroupReport check_weisner_pair(const LatinSquare& l1, const LatinSquare& l2);
/// Square of a complete table (every cell defined), for Weisner checks on HSD(1^v).
LatinSquare to_latin_square(const QuasigroupTable& q);

} // namespace hsd
