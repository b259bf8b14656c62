#pragma once

#include "hsd/point.hpp"

#include <array>
#include <compare>
#include <string>

namespace hsd {

/// Unordered pair {p, q} with p < q, carrying a color 1..3.
struct ColoredPair {
    Point p;
    Point q;
    int color = 1;

    auto operator<=>(const ColoredPair&) const = default;
};

/// An ordered quadruple [a, b, c, d]. Pair colors depend on positions:
/// 1 = {a,b},{c,d}; 2 = {a,c},{b,d}; 3 = {a,d},{b,c}.
struct Block {
    std::array<Point, 4> pts{};

    constexpr Point operator[](std::size_t i) const { return pts[i]; }
    auto operator<=>(const Block&) const = default;

    /// The four equivalent orderings [a,b,c,d], [b,a,d,c], [c,d,a,b], [d,c,b,a].
    std::array<Block, 4> equivalent_forms() const;
    /// Lexicographically least equivalent ordering.
    Block canonical() const;
    bool has_repeated_point() const;
    std::array<ColoredPair, 6> pairs() const;
    std::string to_string() const;
};

inline Block make_block(Point a, Point b, Point c, Point d) { return Block{{a, b, c, d}}; }

} // namespace hsd
