#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hsd {

struct TypePart {
    std::uint32_t size;
    std::uint32_t count;
    bool operator==(const TypePart&) const = default;
};

/// Exponential type notation, e.g. 3^8 2^1. Parts keep their written order;
/// comparison treats the type as a multiset of hole sizes.
class TypeSpec {
public:
    TypeSpec() = default;
    explicit TypeSpec(std::vector<TypePart> parts);

    static TypeSpec parse(std::string_view text);
    /// Builds a normalized type from hole sizes; zero sizes are dropped.
    static TypeSpec from_sizes(const std::vector<std::uint32_t>& sizes);

    const std::vector<TypePart>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::uint64_t point_count() const;
    std::uint64_t hole_count() const;
    /// Hole sizes expanded, in written order.
    std::vector<std::uint32_t> sizes() const;
    /// Pairs of points lying in distinct holes.
    std::uint64_t cross_pair_count() const;

    /// Merged equal sizes, ordered by count descending then size ascending.
    TypeSpec normalized() const;
    std::string to_string() const;

    bool operator==(const TypeSpec& other) const;
    bool operator<(const TypeSpec& other) const;

private:
    std::vector<TypePart> parts_;
};

/// (C(P,2) - sum C(size,2)) / 2. Throws InfeasibleTypeError when odd.
std::uint64_t expected_block_count(const TypeSpec& t);

} // namespace hsd
