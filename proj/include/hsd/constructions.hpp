#pragma once

#include "hsd/design.hpp"
#include "hsd/gdd.hpp"
#include "hsd/latin.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace hsd {

/// Weight per dense point id of a GDD.
struct WeightAssignment {
    std::vector<std::uint32_t> weights;

    static WeightAssignment uniform(const Gdd& g, std::uint32_t w);
    std::uint32_t operator()(std::size_t dense_id) const { return weights[dense_id]; }
};

/// Returns a verified HSD of the requested type, or nullptr if unavailable.
using IngredientSupplier = std::function<std::shared_ptr<const Design>(const TypeSpec&)>;

/// Weighting: inflate each point to w(x) copies and fill each block with an ingredient HSD.
/// Output is verified; throws IngredientError for a missing ingredient type.
Design weight_inflate(const Gdd& g, const WeightAssignment& w, const IngredientSupplier& supply);

/// Inflation by m via an orthogonal pair (A,B): [a,b,c,d] -> [(a,i),(b,j),(c,A(i,j)),(d,B(i,j))].
/// Throws UnsupportedError for m in {2,6} and IngredientError when no pair is available.
Design multiply(const Design& d, std::uint32_t m);
Design multiply(const Design& d, const LatinSquare& a, const LatinSquare& b);

struct FillParams {
    std::uint32_t h = 0;
    std::uint32_t s = 0;
    std::uint32_t t = 0; // only for fill_holes_b
    std::uint32_t v = 0;
    std::uint32_t w = 0;
};

/// Hole filling: outer (hs)^m w^1, inner h^s v^1 -> h^{sm} (w+v)^1.
Design fill_holes_a(const Design& outer, const Design& inner, const FillParams& p);
/// Hole filling with one odd hole: outer (hs)^m (ht)^1 w^1, inners h^s v^1 and h^t v^1 -> h^{sm+t} (w+v)^1.
Design fill_holes_b(const Design& outer, const Design& inner_s, const Design& inner_t, const FillParams& p);

namespace serial {
Design multiply(const Design& d, const LatinSquare& a, const LatinSquare& b);
}

} // namespace hsd
