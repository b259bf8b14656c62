#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hsd {

enum class SearchStatus { Found, None, Timeout };
const char* to_string(SearchStatus s);

struct SearchBudget {
    double seconds = 0;          // 0 = no time limit
    std::uint64_t node_limit = 0; // 0 = no node limit
    std::optional<std::uint64_t> seed;
    int threads = 0;             // 0 = all available
};

/// Exact cover over primary items with dancing links. Rows are added once, then solved.
class ExactCover {
public:
    explicit ExactCover(std::size_t item_count);

    std::size_t item_count() const { return item_count_; }
    std::size_t row_count() const { return row_starts_.size(); }
    /// Items of a row; must be distinct and < item_count.
    std::size_t add_row(const std::vector<std::uint32_t>& items);
    const std::vector<std::uint32_t>& row(std::size_t r) const { return rows_[r]; }

    struct Result {
        SearchStatus status = SearchStatus::None;
        std::vector<std::size_t> rows;
        std::uint64_t nodes = 0;
    };

    /// Logged decisions: depth, item, row; row = SIZE_MAX marks a dead end.
    using ProofLog = std::function<void(std::size_t depth, std::uint32_t item, std::size_t row)>;

    /// Root branches may run in parallel; the witness reported is the one in the lowest-index
    /// root branch, so results do not depend on the thread count. A proof log forces one thread.
    Result solve(const SearchBudget& budget, const ProofLog& log = {}) const;

private:
    std::size_t item_count_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> row_starts_;
};

} // namespace hsd
