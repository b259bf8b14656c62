#include "hsd/block.hpp"

#include <algorithm>

namespace hsd {

std::array<Block, 4> Block::equivalent_forms() const
{
    auto [a, b, c, d] = pts;
    return {make_block(a, b, c, d), make_block(b, a, d, c), make_block(c, d, a, b), make_block(d, c, b, a)};
}

Block Block::canonical() const
{
    auto forms = equivalent_forms();
    return *std::min_element(forms.begin(), forms.end());
}

bool Block::has_repeated_point() const
{
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (pts[i] == pts[j]) return true;
    return false;
}

std::array<ColoredPair, 6> Block::pairs() const
{
    auto mk = [](Point x, Point y, int color) {
        return x < y ? ColoredPair{x, y, color} : ColoredPair{y, x, color};
    };
    auto [a, b, c, d] = pts;
    return {mk(a, b, 1), mk(c, d, 1), mk(a, c, 2), mk(b, d, 2), mk(a, d, 3), mk(b, c, 3)};
}

std::string Block::to_string() const
{
    return "[" + pts[0].to_string() + ", " + pts[1].to_string() + ", " + pts[2].to_string() + ", " +
           pts[3].to_string() + "]";
}

} // namespace hsd
