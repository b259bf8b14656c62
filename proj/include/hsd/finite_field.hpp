#pragma once

#include <cstdint>
#include <vector>

namespace hsd {

/// GF(q) for q = p^e <= 64, elements 0..q-1 as base-p digit vectors of polynomial coefficients.
class FiniteField {
public:
    std::uint32_t order() const { return q_; }
    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return e_; }
    /// Coefficients of the monic modulus below the leading term, lowest degree first (empty for prime fields).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t inv(std::uint32_t a) const;

    /// Exhaustive check of the field axioms.
    bool check_axioms() const;

    friend FiniteField gf(std::uint32_t q);

private:
    std::uint32_t q_ = 0, p_ = 0, e_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> add_, mul_;
};

/// Throws UnsupportedError if q is not a prime power <= 64.
FiniteField gf(std::uint32_t q);
bool is_prime_power(std::uint32_t q, std::uint32_t* p = nullptr, std::uint32_t* e = nullptr);

} // namespace hsd
