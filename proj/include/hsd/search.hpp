#pragma once

#include "hsd/design.hpp"
#include "hsd/development.hpp"
#include "hsd/exact_cover.hpp"
#include "hsd/gdd.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <string>

namespace hsd {

template <typename T>
struct SearchResult {
    SearchStatus status = SearchStatus::None;
    std::optional<T> value;
    std::uint64_t nodes = 0;
    std::size_t rows = 0;
    std::size_t items = 0;
};

/// Orbit exact cover under Z_g acting by +step, infinite points fixed. Items are
/// (color, pair orbit); block orbits covering a pair twice are discarded.
/// Type must be h^n or h^n u^1 with the cyclic hole pattern.
SearchResult<StarterSet> search_starters(std::uint32_t h, std::uint32_t n, std::uint32_t u, std::uint32_t step,
                                         const SearchBudget& budget);
SearchResult<StarterSet> search_starters(const TypeSpec& t, std::uint32_t step, const SearchBudget& budget);

/// Exhaustive search over single colored blocks with first-pair symmetry breaking.
/// `proof_log` receives one line per branch decision when set.
SearchResult<Design> search_direct(const TypeSpec& t, const SearchBudget& budget,
                                   std::ostream* proof_log = nullptr);

/// 4-GDD of type h^n u^1 (lambda 1), cyclic under +step on Z_{hn}. The u infinite points are
/// fixed when `infinite_cycle` is 1, otherwise they are permuted in cycles of that length.
SearchResult<Gdd> search_gdd(std::uint32_t h, std::uint32_t n, std::uint32_t u, std::uint32_t step,
                             const SearchBudget& budget, std::uint32_t infinite_cycle = 1);

/// Splits "h^n u^1" / "h^n" into (h, n, u). Returns false for other shapes.
bool cyclic_shape(const TypeSpec& t, std::uint32_t& h, std::uint32_t& n, std::uint32_t& u);

} // namespace hsd
