#include "hsd/verify.hpp"

#include "hsd/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace hsd {

const char* to_string(Violation::Kind k)
{
    switch (k) {
    case Violation::Kind::HoleOverlap: return "hole-overlap";
    case Violation::Kind::PointNotInHole: return "point-not-in-hole";
    case Violation::Kind::UnknownPoint: return "unknown-point";
    case Violation::Kind::TypeMismatch: return "type-mismatch";
    case Violation::Kind::RepeatedPoint: return "repeated-point";
    case Violation::Kind::HoleCollision: return "hole-collision";
    case Violation::Kind::MissingPair: return "missing-pair";
    case Violation::Kind::DuplicatePair: return "duplicate-pair";
    case Violation::Kind::PairInsideHole: return "pair-inside-hole";
    }
    return "?";
}

std::string Violation::to_string() const
{
    std::ostringstream out;
    out << hsd::to_string(kind);
    switch (kind) {
    case Kind::HoleOverlap:
    case Kind::PointNotInHole: out << " point " << p.to_string(); break;
    case Kind::UnknownPoint: out << " point " << p.to_string() << " in block " << block; break;
    case Kind::TypeMismatch: break;
    case Kind::RepeatedPoint:
    case Kind::HoleCollision: out << " block " << block << " points " << p.to_string() << "," << q.to_string(); break;
    case Kind::MissingPair:
    case Kind::DuplicatePair:
    case Kind::PairInsideHole:
        out << " color " << color << " {" << p.to_string() << "," << q.to_string() << "} count " << count;
        break;
    }
    return out.str();
}

std::size_t VerificationReport::count(Violation::Kind k) const { return totals[static_cast<std::size_t>(k)]; }

std::string VerificationReport::summary() const
{
    std::ostringstream out;
    out << (pass ? "PASS" : "FAIL") << ", " << block_count << " blocks";
    if (expected_blocks) out << " (expected " << expected_blocks << ")";
    if (!pass) {
        out << ", " << violation_count << " violations:";
        for (std::size_t k = 0; k < totals.size(); ++k)
            if (totals[k]) out << ' ' << hsd::to_string(static_cast<Violation::Kind>(k)) << "=" << totals[k];
    }
    return out.str();
}

namespace {

void add(VerificationReport& r, Violation v)
{
    ++r.violation_count;
    ++r.totals[static_cast<std::size_t>(v.kind)];
    if (r.violations.size() < VerificationReport::kMaxListed) r.violations.push_back(v);
}

// Structural checks shared by both implementations: holes, type, block shape.
// Returns hole index per dense id and marks blocks usable for pair counting.
std::vector<std::int32_t> check_structure(const Design& d, VerificationReport& r, std::vector<char>& usable)
{
    for (const auto& h : d.holes.holes)
        for (Point p : h)
            if (!d.space.contains(p)) add(r, {Violation::Kind::UnknownPoint, 0, p, p, 0, 0});
    auto hole = d.hole_index();
    for (std::size_t i = 0; i < hole.size(); ++i) {
        if (hole[i] == -1) add(r, {Violation::Kind::PointNotInHole, 0, d.space.point(i), {}, 0, 0});
        if (hole[i] == -2) add(r, {Violation::Kind::HoleOverlap, 0, d.space.point(i), {}, 0, 0});
    }
    if (!(d.holes.type() == d.declared_type)) add(r, {Violation::Kind::TypeMismatch, 0, {}, {}, 0, 0});

    usable.assign(d.blocks.size(), 1);
    for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
        const auto& b = d.blocks[bi];
        for (Point p : b.pts)
            if (!d.space.contains(p)) {
                add(r, {Violation::Kind::UnknownPoint, 0, p, p, bi, 0});
                usable[bi] = 0;
            }
        if (!usable[bi]) continue;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                if (b[i] == b[j]) {
                    add(r, {Violation::Kind::RepeatedPoint, 0, b[i], b[j], bi, 0});
                    continue;
                }
                auto hi = hole[d.space.dense(b[i])], hj = hole[d.space.dense(b[j])];
                if (hi >= 0 && hi == hj) add(r, {Violation::Kind::HoleCollision, 0, b[i], b[j], bi, 0});
            }
    }
    return hole;
}

void finish(const Design& d, VerificationReport& r)
{
    r.block_count = d.blocks.size();
    try {
        r.expected_blocks = expected_block_count(d.declared_type);
    }
    catch (const InfeasibleTypeError&) {
        r.expected_blocks = 0;
    }
    r.pass = r.violation_count == 0;
}

} // namespace

VerificationReport verify_design(const Design& d)
{
    VerificationReport r;
    std::vector<char> usable;
    auto hole = check_structure(d, r, usable);

    const std::size_t n = d.space.size();
    std::vector<std::uint16_t> counts(3 * n * n, 0);
    const auto nb = static_cast<std::int64_t>(d.blocks.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t bi = 0; bi < nb; ++bi) {
        if (!usable[bi]) continue;
        for (const auto& cp : d.blocks[bi].pairs()) {
            if (cp.p == cp.q) continue;
            std::size_t idx = (cp.color - 1) * n * n + d.space.dense(cp.p) * n + d.space.dense(cp.q);
#pragma omp atomic update
            ++counts[idx];
        }
    }

    // Row-wise scan; per-row lists keep the merged order deterministic.
    std::vector<std::vector<Violation>> rows(n);
    const auto ni = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t x = 0; x < ni; ++x) {
        if (hole[x] < 0) continue;
        for (int c = 0; c < 3; ++c)
            for (std::size_t y = x + 1; y < n; ++y) {
                if (hole[y] < 0) continue;
                auto k = counts[c * n * n + x * n + y];
                Point p = d.space.point(x), q = d.space.point(y);
                if (hole[x] == hole[y]) {
                    if (k) rows[x].push_back({Violation::Kind::PairInsideHole, c + 1, p, q, 0, k});
                }
                else if (k == 0)
                    rows[x].push_back({Violation::Kind::MissingPair, c + 1, p, q, 0, 0});
                else if (k > 1)
                    rows[x].push_back({Violation::Kind::DuplicatePair, c + 1, p, q, 0, k});
            }
    }
    for (auto& row : rows)
        for (auto& v : row) add(r, v);
    finish(d, r);
    return r;
}

namespace serial {

VerificationReport verify_design(const Design& d)
{
    VerificationReport r;
    std::vector<char> usable;
    auto hole = check_structure(d, r, usable);

    std::map<std::tuple<int, Point, Point>, std::uint32_t> counts;
    for (std::size_t bi = 0; bi < d.blocks.size(); ++bi) {
        if (!usable[bi]) continue;
        for (const auto& cp : d.blocks[bi].pairs())
            if (cp.p != cp.q) ++counts[{cp.color, cp.p, cp.q}];
    }
    const std::size_t n = d.space.size();
    for (std::size_t x = 0; x < n; ++x) {
        if (hole[x] < 0) continue;
        for (int c = 1; c <= 3; ++c)
            for (std::size_t y = x + 1; y < n; ++y) {
                if (hole[y] < 0) continue;
                Point p = d.space.point(x), q = d.space.point(y);
                auto it = counts.find({c, p, q});
                std::uint32_t k = it == counts.end() ? 0 : it->second;
                if (hole[x] == hole[y]) {
                    if (k) add(r, {Violation::Kind::PairInsideHole, c, p, q, 0, k});
                }
                else if (k == 0)
                    add(r, {Violation::Kind::MissingPair, c, p, q, 0, 0});
                else if (k > 1)
                    add(r, {Violation::Kind::DuplicatePair, c, p, q, 0, k});
            }
    }
    finish(d, r);
    return r;
}

} // namespace serial

} // namespace hsd
