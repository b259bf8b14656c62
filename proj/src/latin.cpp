#include "hsd/latin.hpp"

#include "hsd/errors.hpp"

#include <sstream>

namespace hsd {

bool LatinSquare::is_latin() const
{
    if (cells.size() != std::size_t{order} * order) return false;
    for (std::uint32_t i = 0; i < order; ++i) {
        std::vector<char> row(order, 0), col(order, 0);
        for (std::uint32_t j = 0; j < order; ++j) {
            auto r = at(i, j), c = at(j, i);
            if (r >= order || c >= order || row[r]++ || col[c]++) return false;
        }
    }
    return true;
}

LatinSquare LatinSquare::transpose() const
{
    LatinSquare t{order, std::vector<std::uint32_t>(cells.size())};
    for (std::uint32_t i = 0; i < order; ++i)
        for (std::uint32_t j = 0; j < order; ++j) t.cells[j * order + i] = at(i, j);
    return t;
}

std::string LatinSquare::to_string() const
{
    std::ostringstream out;
    for (std::uint32_t i = 0; i < order; ++i) {
        for (std::uint32_t j = 0; j < order; ++j) out << (j ? " " : "") << at(i, j);
        out << "\n";
    }
    return out.str();
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b)
{
    if (a.order != b.order) return false;
    const auto m = a.order;
    std::vector<char> seen(std::size_t{m} * m, 0);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            if (seen[a.at(i, j) * m + b.at(i, j)]++) return false;
    return true;
}

bool MOLSSet::check() const
{
    for (const auto& s : squares)
        if (s.order != order || !s.is_latin()) return false;
    for (std::size_t i = 0; i < squares.size(); ++i)
        for (std::size_t j = i + 1; j < squares.size(); ++j)
            if (!are_orthogonal(squares[i], squares[j])) return false;
    return true;
}

MOLSSet mols_prime_power(const FiniteField& f, std::uint32_t count)
{
    const auto q = f.order();
    if (count > q - 1)
        throw UnsupportedError("at most " + std::to_string(q - 1) + " MOLS of order " + std::to_string(q));
    MOLSSet ms{q, {}};
    for (std::uint32_t a = 1; a <= count; ++a) {
        LatinSquare l{q, std::vector<std::uint32_t>(std::size_t{q} * q)};
        for (std::uint32_t x = 0; x < q; ++x)
            for (std::uint32_t y = 0; y < q; ++y) l.cells[x * q + y] = f.add(f.mul(a, x), y);
        ms.squares.push_back(std::move(l));
    }
    if (!ms.check()) throw InconsistencyError("field construction produced non-orthogonal squares");
    return ms;
}

MOLSSet mols_kronecker(const MOLSSet& a, const MOLSSet& b)
{
    if (a.squares.size() != b.squares.size()) throw UnsupportedError("MOLS sets differ in size");
    const auto ma = a.order, mb = b.order, m = ma * mb;
    MOLSSet out{m, {}};
    for (std::size_t k = 0; k < a.squares.size(); ++k) {
        LatinSquare l{m, std::vector<std::uint32_t>(std::size_t{m} * m)};
        for (std::uint32_t x = 0; x < m; ++x)
            for (std::uint32_t y = 0; y < m; ++y)
                l.cells[x * m + y] =
                    a.squares[k].at(x / mb, y / mb) * mb + b.squares[k].at(x % mb, y % mb);
        out.squares.push_back(std::move(l));
    }
    return out;
}

std::optional<MOLSSet> mols_of_order(std::uint32_t m, std::uint32_t count)
{
    if (m == 0) return std::nullopt;
    MOLSSet acc{1, std::vector<LatinSquare>(count, LatinSquare{1, {0}})};
    std::uint32_t r = m;
    for (std::uint32_t p = 2; r > 1; ++p) {
        if (r % p != 0) continue;
        std::uint32_t q = 1;
        while (r % p == 0) {
            r /= p;
            q *= p;
        }
        if (q > 64 || count > q - 1) return std::nullopt;
        acc = mols_kronecker(acc, mols_prime_power(gf(q), count));
    }
    return acc;
}

} // namespace hsd
