#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace hsd {

/// A finite point (element of Z_g) or an infinite point x_label.
/// Ordering: finite points by index, then infinite points by label.
class Point {
public:
    constexpr Point() = default;

    static constexpr Point finite(std::uint32_t index) { return Point{index}; }
    static constexpr Point infinite(std::uint32_t label) { return Point{kInfiniteBit | label}; }

    constexpr bool is_finite() const { return (key_ & kInfiniteBit) == 0; }
    constexpr bool is_infinite() const { return !is_finite(); }
    constexpr std::uint32_t index() const { return key_; }
    constexpr std::uint32_t label() const { return key_ & ~kInfiniteBit; }
    constexpr std::uint32_t key() const { return key_; }

    constexpr auto operator<=>(const Point&) const = default;

    std::string to_string() const;
    /// Accepts "12" or "x3". Throws ParseError.
    static Point parse(std::string_view token);

private:
    explicit constexpr Point(std::uint32_t key) : key_(key) {}
    static constexpr std::uint32_t kInfiniteBit = 0x80000000u;
    std::uint32_t key_ = 0;
};

/// Points 0..g-1 and x1..xu, with a dense numbering (finite first).
struct PointSpace {
    std::uint32_t finite_count = 0;
    std::uint32_t infinite_count = 0;

    std::size_t size() const { return std::size_t{finite_count} + infinite_count; }
    bool contains(Point p) const
    {
        return p.is_finite() ? p.index() < finite_count : p.label() >= 1 && p.label() <= infinite_count;
    }
    std::size_t dense(Point p) const { return p.is_finite() ? p.index() : finite_count + p.label() - 1; }
    Point point(std::size_t dense_id) const
    {
        return dense_id < finite_count ? Point::finite(static_cast<std::uint32_t>(dense_id))
                                       : Point::infinite(static_cast<std::uint32_t>(dense_id - finite_count + 1));
    }

    bool operator==(const PointSpace&) const = default;
};

} // namespace hsd
