#pragma once

#include "hsd/design.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hsd {

struct Violation {
    enum class Kind {
        HoleOverlap,       // point listed in two holes
        PointNotInHole,    // point covered by no hole
        UnknownPoint,      // point outside the point set
        TypeMismatch,      // hole sizes differ from declared type
        RepeatedPoint,     // block repeats a point
        HoleCollision,     // block meets a hole twice
        MissingPair,       // cross-hole pair absent in some color
        DuplicatePair,     // pair covered more than once in some color
        PairInsideHole,    // pair inside a hole covered by a block
    };
    Kind kind;
    int color = 0;
    Point p{};
    Point q{};
    std::size_t block = 0;
    std::uint32_t count = 0;

    std::string to_string() const;
};

const char* to_string(Violation::Kind k);

struct VerificationReport {
    bool pass = false;
    std::size_t block_count = 0;
    std::size_t expected_blocks = 0;
    std::size_t violation_count = 0;
    /// First violations in deterministic order; capped at `kMaxListed`.
    std::vector<Violation> violations;
    /// Totals per kind, including unlisted ones.
    std::vector<std::size_t> totals = std::vector<std::size_t>(9, 0);

    static constexpr std::size_t kMaxListed = 2000;
    std::size_t count(Violation::Kind k) const;
    std::string summary() const;
};

/// Ground-truth HSD check. Parallel pair counting.
VerificationReport verify_design(const Design& d);

namespace serial {
VerificationReport verify_design(const Design& d);
}

} // namespace hsd
