#include "hsd/finite_field.hpp"

#include "hsd/errors.hpp"

#include <map>

namespace hsd {

bool is_prime_power(std::uint32_t q, std::uint32_t* p_out, std::uint32_t* e_out)
{
    if (q < 2) return false;
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0, r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) return false;
    if (p_out) *p_out = p;
    if (e_out) *e_out = e;
    return true;
}

namespace {

// Monic irreducible polynomials, coefficients lowest degree first (leading 1 omitted).
const std::map<std::uint32_t, std::vector<std::uint32_t>>& moduli()
{
    static const std::map<std::uint32_t, std::vector<std::uint32_t>> m = {
        {4, {1, 1}},                 // x^2 + x + 1
        {8, {1, 1, 0}},              // x^3 + x + 1
        {16, {1, 1, 0, 0}},          // x^4 + x + 1
        {32, {1, 0, 1, 0, 0}},       // x^5 + x^2 + 1
        {64, {1, 1, 0, 0, 0, 0}},    // x^6 + x + 1
        {9, {1, 0}},                 // x^2 + 1
        {27, {1, 2, 0}},             // x^3 + 2x + 1
        {25, {2, 0}},                // x^2 + 2
        {49, {1, 0}},                // x^2 + 1
    };
    return m;
}

std::vector<std::uint32_t> digits(std::uint32_t a, std::uint32_t p, std::uint32_t e)
{
    std::vector<std::uint32_t> d(e);
    for (auto& x : d) {
        x = a % p;
        a /= p;
    }
    return d;
}

std::uint32_t from_digits(const std::vector<std::uint32_t>& d, std::uint32_t p)
{
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
}

// Trial division of x^e + tail by every monic polynomial of degree 1..e/2.
bool irreducible(const std::vector<std::uint32_t>& tail, std::uint32_t p, std::uint32_t e)
{
    for (std::uint32_t d = 1; d <= e / 2; ++d) {
        std::uint32_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint32_t c = 0; c < count; ++c) {
            auto f = digits(c, p, d);
            f.push_back(1); // monic of degree d
            std::vector<std::uint32_t> r = tail;
            r.push_back(1);
            for (std::size_t top = r.size() - 1; top >= f.size() - 1; --top) {
                auto coef = r[top];
                if (coef == 0) continue;
                for (std::size_t i = 0; i < f.size(); ++i) {
                    auto& t = r[top - (f.size() - 1) + i];
                    t = (t + p * p - coef * f[i] % p) % p;
                }
            }
            bool zero = true;
            for (std::size_t i = 0; i + 1 < f.size(); ++i) zero &= r[i] == 0;
            if (zero) return false;
        }
    }
    return true;
}

} // namespace

std::uint32_t FiniteField::neg(std::uint32_t a) const
{
    for (std::uint32_t b = 0; b < q_; ++b)
        if (add(a, b) == 0) return b;
    throw InconsistencyError("no additive inverse");
}

std::uint32_t FiniteField::inv(std::uint32_t a) const
{
    for (std::uint32_t b = 1; b < q_; ++b)
        if (mul(a, b) == 1) return b;
    throw InconsistencyError("zero has no multiplicative inverse");
}

bool FiniteField::check_axioms() const
{
    for (std::uint32_t a = 0; a < q_; ++a) {
        if (add(a, 0) != a || mul(a, 1) != a || mul(a, 0) != 0) return false;
        bool has_neg = false, has_inv = a == 0;
        for (std::uint32_t b = 0; b < q_; ++b) {
            if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
            has_neg |= add(a, b) == 0;
            has_inv |= mul(a, b) == 1;
            for (std::uint32_t c = 0; c < q_; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c))) return false;
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
            }
        }
        if (!has_neg || !has_inv) return false;
    }
    return true;
}

FiniteField gf(std::uint32_t q)
{
    std::uint32_t p = 0, e = 0;
    if (q > 64 || !is_prime_power(q, &p, &e))
        throw UnsupportedError("gf(" + std::to_string(q) + "): not a prime power <= 64");
    FiniteField f;
    f.q_ = q;
    f.p_ = p;
    f.e_ = e;
    f.add_.resize(q * q);
    f.mul_.resize(q * q);
    if (e == 1) {
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                f.add_[a * q + b] = (a + b) % q;
                f.mul_[a * q + b] = a * b % q;
            }
        return f;
    }
    f.modulus_ = moduli().at(q);
    if (!irreducible(f.modulus_, p, e))
        throw InconsistencyError("embedded modulus for GF(" + std::to_string(q) + ") is reducible");
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) {
            auto da = digits(a, p, e), db = digits(b, p, e);
            std::vector<std::uint32_t> s(e);
            for (std::uint32_t i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
            f.add_[a * q + b] = from_digits(s, p);
            std::vector<std::uint32_t> prod(2 * e - 1, 0);
            for (std::uint32_t i = 0; i < e; ++i)
                for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            // x^e = -tail
            for (std::size_t top = prod.size() - 1; top >= e; --top) {
                auto c = prod[top];
                prod[top] = 0;
                for (std::uint32_t i = 0; i < e; ++i)
                    prod[top - e + i] = (prod[top - e + i] + p * p - c * f.modulus_[i] % p) % p;
            }
            prod.resize(e);
            f.mul_[a * q + b] = from_digits(prod, p);
        }
    return f;
}

} // namespace hsd
