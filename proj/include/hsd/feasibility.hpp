#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace hsd {

/// Necessary conditions for HSD(3^n u^1).
struct FeasibilityReport {
    std::uint64_t n = 0;
    std::uint64_t u = 0;
    bool congruence_ok = false; // n(n + 2u - 1) = 0 mod 4
    bool bound_ok = false;      // n >= 1 + 2u/3
    bool min_n_ok = false;      // n >= 4
    bool feasible = false;
    /// Present exactly when the block count is integral (same as congruence_ok).
    std::optional<std::uint64_t> expected_blocks;

    /// "feasible, expected 150 blocks" or "infeasible: congruence, bound".
    std::string describe() const;
};

FeasibilityReport is_feasible(std::uint64_t n, std::uint64_t u);

} // namespace hsd
