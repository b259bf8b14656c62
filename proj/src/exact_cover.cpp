#include "hsd/exact_cover.hpp"

#include "hsd/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hsd {

const char* to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::Found: return "FOUND";
    case SearchStatus::None: return "NONE";
    case SearchStatus::Timeout: return "TIMEOUT";
    }
    return "?";
}

ExactCover::ExactCover(std::size_t item_count) : item_count_(item_count) {}

std::size_t ExactCover::add_row(const std::vector<std::uint32_t>& items)
{
    for (auto i : items)
        if (i >= item_count_) throw InconsistencyError("exact cover row uses an unknown item");
    row_starts_.push_back(rows_.size());
    rows_.push_back(items);
    return rows_.size() - 1;
}

namespace {

// Dancing links: node 0 is the root, 1..n are item headers, then row nodes.
struct Links {
    std::vector<std::uint32_t> L, R, U, D, C, row, len;

    Links(std::size_t items, const std::vector<std::vector<std::uint32_t>>& rows, const std::vector<std::size_t>& order)
    {
        std::size_t total = 1 + items;
        for (const auto& r : rows) total += r.size();
        L.resize(total);
        R.resize(total);
        U.resize(total);
        D.resize(total);
        C.resize(total);
        row.assign(total, 0);
        len.assign(items + 1, 0);
        for (std::uint32_t i = 0; i <= items; ++i) {
            L[i] = i == 0 ? static_cast<std::uint32_t>(items) : i - 1;
            R[i] = i == items ? 0 : i + 1;
            U[i] = D[i] = C[i] = i;
        }
        auto next = static_cast<std::uint32_t>(items + 1);
        for (auto r : order) {
            const auto& its = rows[r];
            if (its.empty()) continue;
            std::uint32_t first = next;
            for (std::size_t k = 0; k < its.size(); ++k) {
                std::uint32_t node = next++, c = its[k] + 1;
                C[node] = c;
                row[node] = static_cast<std::uint32_t>(r);
                U[node] = U[c];
                D[node] = c;
                D[U[c]] = node;
                U[c] = node;
                ++len[c];
                L[node] = k == 0 ? node : node - 1;
                R[node] = first;
                if (k > 0) R[node - 1] = node;
                L[first] = node;
            }
        }
    }

    void cover(std::uint32_t c)
    {
        L[R[c]] = L[c];
        R[L[c]] = R[c];
        for (auto i = D[c]; i != c; i = D[i])
            for (auto j = R[i]; j != i; j = R[j]) {
                U[D[j]] = U[j];
                D[U[j]] = D[j];
                --len[C[j]];
            }
    }

    void uncover(std::uint32_t c)
    {
        for (auto i = U[c]; i != c; i = U[i])
            for (auto j = L[i]; j != i; j = L[j]) {
                ++len[C[j]];
                U[D[j]] = j;
                D[U[j]] = j;
            }
        L[R[c]] = c;
        R[L[c]] = c;
    }

    void select(std::uint32_t r)
    {
        for (auto j = R[r]; j != r; j = R[j]) cover(C[j]);
    }

    void unselect(std::uint32_t r)
    {
        for (auto j = L[r]; j != r; j = L[j]) uncover(C[j]);
    }

    // Fail-first: the live item with the fewest remaining rows.
    std::uint32_t choose() const
    {
        std::uint32_t best = R[0], best_len = std::numeric_limits<std::uint32_t>::max();
        for (auto c = R[0]; c != 0; c = R[c])
            if (len[c] < best_len) {
                best = c;
                best_len = len[c];
                if (best_len <= 1) break;
            }
        return best;
    }
};

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> timed_out{false};
    std::atomic<std::size_t> best_branch{std::numeric_limits<std::size_t>::max()};
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline = false;
    std::uint64_t node_limit = 0;
};

class Worker {
public:
    Worker(Links links, Shared& shared, std::size_t branch, const ExactCover::ProofLog& log) :
        links_(std::move(links)), shared_(shared), branch_(branch), log_(log)
    {
    }

    // Returns true when a solution is in `solution`.
    bool run(std::size_t depth)
    {
        if (links_.R[0] == 0) return true;
        if (stopped()) return false;
        auto c = links_.choose();
        if (links_.len[c] == 0) {
            if (log_) log_(depth, c - 1, std::numeric_limits<std::size_t>::max());
            return false;
        }
        links_.cover(c);
        for (auto r = links_.D[c]; r != c; r = links_.D[r]) {
            if (stopped()) break;
            tick();
            if (log_) log_(depth, c - 1, links_.row[r]);
            solution.push_back(links_.row[r]);
            links_.select(r);
            bool found = run(depth + 1);
            links_.unselect(r);
            if (found) {
                links_.uncover(c);
                return true;
            }
            solution.pop_back();
        }
        links_.uncover(c);
        return false;
    }

    void tick()
    {
        if (++local_ % 1024 == 0) flush();
    }

    void flush()
    {
        auto total = shared_.nodes.fetch_add(local_ - flushed_) + (local_ - flushed_);
        flushed_ = local_;
        if ((shared_.node_limit && total >= shared_.node_limit) ||
            (shared_.has_deadline && std::chrono::steady_clock::now() >= shared_.deadline))
            shared_.timed_out = true;
    }

    bool stopped() const { return shared_.timed_out || shared_.best_branch.load() < branch_; }

    Links& links() { return links_; }
    std::vector<std::size_t> solution;

private:
    Links links_;
    Shared& shared_;
    std::size_t branch_;
    const ExactCover::ProofLog& log_;
    std::uint64_t local_ = 0, flushed_ = 0;
};

} // namespace

ExactCover::Result ExactCover::solve(const SearchBudget& budget, const ProofLog& log) const
{
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    if (budget.seed) {
        std::mt19937_64 rng(*budget.seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    Links base(item_count_, rows_, order);
    Shared shared;
    shared.node_limit = budget.node_limit;
    if (budget.seconds > 0) {
        shared.has_deadline = true;
        shared.deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(budget.seconds));
    }

    Result result;
    if (base.R[0] == 0) {
        result.status = SearchStatus::Found;
        return result;
    }
    auto c = base.choose();
    std::vector<std::uint32_t> roots;
    for (auto r = base.D[c]; r != c; r = base.D[r]) roots.push_back(r);
    if (roots.empty()) {
        if (log) log(0, c - 1, std::numeric_limits<std::size_t>::max());
        return result;
    }

    std::vector<SearchStatus> status(roots.size(), SearchStatus::None);
    std::vector<std::vector<std::size_t>> solutions(roots.size());
    int threads = budget.threads;
#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#endif
    if (log) threads = 1;
    const auto nroots = static_cast<std::int64_t>(roots.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1)
    for (std::int64_t i = 0; i < nroots; ++i) {
        auto bi = static_cast<std::size_t>(i);
        if (shared.timed_out || shared.best_branch.load() < bi) {
            status[bi] = SearchStatus::Timeout;
            continue;
        }
        Worker w(base, shared, bi, log);
        w.links().cover(c);
        w.tick();
        if (log) log(0, c - 1, w.links().row[roots[bi]]);
        w.solution.push_back(w.links().row[roots[bi]]);
        w.links().select(roots[bi]);
        bool found = w.run(1);
        w.flush();
        if (found) {
            status[bi] = SearchStatus::Found;
            solutions[bi] = w.solution;
            auto cur = shared.best_branch.load();
            while (bi < cur && !shared.best_branch.compare_exchange_weak(cur, bi)) {
            }
        }
        else if (shared.timed_out || shared.best_branch.load() < bi)
            status[bi] = SearchStatus::Timeout;
    }

    result.nodes = shared.nodes.load();
    bool any_timeout = false;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (status[i] == SearchStatus::Found) {
            result.status = SearchStatus::Found;
            result.rows = solutions[i];
            return result;
        }
        any_timeout |= status[i] == SearchStatus::Timeout;
    }
    result.status = any_timeout ? SearchStatus::Timeout : SearchStatus::None;
    return result;
}

} // namespace hsd
