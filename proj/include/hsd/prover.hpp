#pragma once

#include "hsd/catalog.hpp"
#include "hsd/design.hpp"
#include "hsd/feasibility.hpp"
#include "hsd/type_spec.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hsd {

/// One rule application; children are ingredient recipes in rule-specific order.
struct Recipe {
    std::string rule;
    TypeSpec target;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::shared_ptr<const Recipe>> children;

    std::string param(const std::string& key) const;
    /// Indented text, one node per line.
    std::string to_string() const;
    std::size_t depth() const;
};

enum class VerdictKind { Exists, Infeasible, UnknownHere };
const char* to_string(VerdictKind k);

struct ExistenceVerdict {
    VerdictKind kind = VerdictKind::UnknownHere;
    std::shared_ptr<const Recipe> recipe;
    std::optional<FeasibilityReport> feasibility;
    std::string reason;
    /// Materialized and certified design (materialize mode only).
    std::shared_ptr<const Design> design;
};

enum class ProveMode { Plan, Materialize };

struct ProverOptions {
    ProveMode mode = ProveMode::Plan;
    /// Materialization cap on point count; 0 = unlimited.
    std::uint64_t max_points = 300;
    std::uint64_t search_nodes = 250'000;
    std::size_t search_max_blocks = 60;
    std::size_t max_depth = 12;
};

/// Not thread-safe; use one Prover per thread.
class Prover {
public:
    explicit Prover(ProverOptions opts = {}, const Catalog& catalog = Catalog::embedded());

    /// Top-level target HSD(3^n u^1), gated by is_feasible(n, u).
    ExistenceVerdict prove(std::uint64_t n, std::uint64_t u);
    /// Any type; no is_feasible gate, only type-level necessary conditions.
    ExistenceVerdict prove_type(const TypeSpec& t);

    /// Executes a recipe, certifying every node. Throws on failure.
    std::shared_ptr<const Design> materialize(const Recipe& r);

    const ProverOptions& options() const { return opts_; }

private:
    struct Outcome {
        std::shared_ptr<const Recipe> recipe;
        std::vector<std::string> frontier;
        bool truncated = false; // hit max_depth somewhere below; not memoized
    };

    Outcome resolve(const TypeSpec& t, std::size_t depth);
    Outcome resolve_uncached(const TypeSpec& t, std::size_t depth);
    std::shared_ptr<const Recipe> try_search(const TypeSpec& t);
    std::shared_ptr<const Design> searched_design(const TypeSpec& t);

    ProverOptions opts_;
    const Catalog& catalog_;
    std::map<TypeSpec, Outcome> memo_;
    std::map<TypeSpec, std::shared_ptr<const Design>> search_cache_;
    std::map<const Recipe*, std::shared_ptr<const Design>> built_;
};

/// Type-level necessary conditions: integral block count, at least four nonzero holes when
/// there are cross pairs, the largest-hole bound, and known small nonexistence (1^5, 1^9, 2^4).
bool type_may_exist(const TypeSpec& t, std::string* why = nullptr);

struct TableCell {
    std::uint64_t n = 0;
    std::uint64_t u = 0;
    VerdictKind kind = VerdictKind::UnknownHere;
    std::string rule;
    std::size_t blocks = 0;
    bool certified = false;
};

struct ExistenceTable {
    std::uint64_t n_max = 0;
    std::uint64_t u_max = 0;
    std::vector<TableCell> cells; // row-major, n from 1, u from 0

    const TableCell& at(std::uint64_t n, std::uint64_t u) const { return cells[(n - 1) * (u_max + 1) + u]; }
    std::string to_csv() const;
    std::string to_text() const;
};

ExistenceTable existence_table(std::uint64_t n_max, std::uint64_t u_max, const ProverOptions& opts = {},
                               int threads = 0);

} // namespace hsd
