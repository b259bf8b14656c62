#include "hsd/feasibility.hpp"

namespace hsd {

FeasibilityReport is_feasible(std::uint64_t n, std::uint64_t u)
{
    FeasibilityReport r;
    r.n = n;
    r.u = u;
    r.congruence_ok = n == 0 || n * (n + 2 * u - 1) % 4 == 0;
    r.bound_ok = 3 * n >= 3 + 2 * u;
    r.min_n_ok = n >= 4;
    r.feasible = r.congruence_ok && r.bound_ok && r.min_n_ok;
    // Cross pairs of 3^n u^1: 3n(3n-3)/2 + 3nu; halved when even.
    std::uint64_t cross = (n == 0 ? 0 : 3 * n * (3 * n - 3) / 2) + 3 * n * u;
    if (cross % 2 == 0) r.expected_blocks = cross / 2;
    return r;
}

std::string FeasibilityReport::describe() const
{
    if (feasible) return "feasible, expected " + std::to_string(*expected_blocks) + " blocks";
    std::string out = "infeasible:";
    const char* sep = " ";
    if (!congruence_ok) {
        out += sep + std::string("congruence");
        sep = ", ";
    }
    if (!bound_ok) {
        out += sep + std::string("bound");
        sep = ", ";
    }
    if (!min_n_ok) out += sep + std::string("n < 4");
    return out;
}

} // namespace hsd
