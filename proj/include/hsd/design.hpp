#pragma once

#include "hsd/block.hpp"
#include "hsd/point.hpp"
#include "hsd/type_spec.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hsd {

struct HoleStructure {
    std::vector<std::vector<Point>> holes;

    std::vector<std::uint32_t> sizes() const;
    TypeSpec type() const;
};

struct Design {
    PointSpace space;
    HoleStructure holes;
    std::vector<Block> blocks;
    TypeSpec declared_type;

    /// Hole index per dense point id; -1 for points in no hole, -2 for points in more than one.
    std::vector<std::int32_t> hole_index() const;
    /// Canonicalizes every block and sorts the list.
    void canonicalize();
};

/// Design with all-finite points 0..P-1 and holes laid out consecutively in the order of `t.sizes()`.
Design empty_design(const TypeSpec& t);

Design read_design(std::istream& in);
Design read_design_file(const std::string& path);
Design parse_design(const std::string& text);
void write_design(std::ostream& out, const Design& d);
std::string format_design(const Design& d);

} // namespace hsd
