#pragma once

#include "hsd/finite_field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hsd {

struct LatinSquare {
    std::uint32_t order = 0;
    std::vector<std::uint32_t> cells; // row-major

    std::uint32_t at(std::uint32_t r, std::uint32_t c) const { return cells[r * order + c]; }
    bool is_latin() const;
    LatinSquare transpose() const;
    std::string to_string() const;
};

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

struct MOLSSet {
    std::uint32_t order = 0;
    std::vector<LatinSquare> squares;

    /// Every square Latin and every pair orthogonal.
    bool check() const;
};

/// L_a(x,y) = a*x + y for the first `count` nonzero a. Throws if count > q-1.
MOLSSet mols_prime_power(const FiniteField& f, std::uint32_t count);
/// Direct product of two sets of equal size.
MOLSSet mols_kronecker(const MOLSSet& a, const MOLSSet& b);
/// `count` MOLS of order m from prime-power factors, or nullopt if a factor is too small.
std::optional<MOLSSet> mols_of_order(std::uint32_t m, std::uint32_t count);

} // namespace hsd
