#include "hsd/catalog.hpp"
#include "hsd/constructions.hpp"
#include "hsd/design.hpp"
#include "hsd/development.hpp"
#include "hsd/errors.hpp"
#include "hsd/feasibility.hpp"
#include "hsd/prover.hpp"
#include "hsd/quasigroup.hpp"
#include "hsd/search.hpp"
#include "hsd/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

enum Exit { Ok = 0, Invalid = 1, Unknown = 2, Usage = 3 };

// Raised for unreadable or unwritable files so they map to the IO exit code.
struct IoError : hsd::Error {
    using hsd::Error::Error;
};

std::string read_input(const std::string& path)
{
    std::ostringstream s;
    if (path == "-") {
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    s << in.rdbuf();
    return s.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
}

std::string header_of(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        auto b = line.find_last_not_of(" \t\r");
        return line.substr(a, b - a + 1);
    }
    return {};
}

// Designs are read directly; starter files are developed first.
hsd::Design load_design(const std::string& path)
{
    auto text = read_input(path);
    if (header_of(text) == "hsd-starter v1") return hsd::develop(hsd::parse_starter(text));
    return hsd::parse_design(text);
}

hsd::SearchBudget budget_of(double seconds, std::uint64_t nodes, std::uint64_t seed, bool seeded, int threads)
{
    hsd::SearchBudget b;
    b.seconds = seconds;
    b.node_limit = nodes;
    if (seeded) b.seed = seed;
    b.threads = threads;
    return b;
}

int search_exit(hsd::SearchStatus s)
{
    switch (s) {
    case hsd::SearchStatus::Found: return Ok;
    case hsd::SearchStatus::None: return Invalid;
    case hsd::SearchStatus::Timeout: return Unknown;
    }
    return Unknown;
}

void set_threads(int threads)
{
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Holey Schroder designs: verify, develop, search, construct, prove"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option_function<int>(
        "--threads",
        [&](int t) {
            threads = t;
            set_threads(t);
        },
        "Worker threads (0 = all cores); results do not depend on it");
    int code = Ok;

    std::string in_path, out_path;

    auto* verify = app.add_subcommand("verify", "Verify a design (or develop and verify a starter file)");
    verify->add_option("file", in_path, "Design or starter file, - for stdin")->required();
    bool quiet = false;
    verify->add_flag("-q,--quiet", quiet, "Only print the summary line");
    verify->callback([&] {
        auto d = load_design(in_path);
        auto r = hsd::verify_design(d);
        std::cout << r.summary() << "\n";
        if (!quiet)
            for (const auto& v : r.violations) std::cout << "  " << v.to_string() << "\n";
        code = r.pass ? Ok : Invalid;
    });

    auto* develop = app.add_subcommand("develop", "Develop starter blocks into a design");
    bool allow_dup = false;
    develop->add_option("file", in_path, "Starter file, - for stdin")->required();
    develop->add_option("-o,--output", out_path, "Output design file (default stdout)");
    develop->add_flag("--allow-duplicates", allow_dup, "Merge repeated blocks instead of failing");
    develop->callback([&] {
        auto s = hsd::parse_starter(read_input(in_path));
        write_output(out_path, hsd::format_design(hsd::develop(s, {allow_dup})));
    });

    auto* feasible = app.add_subcommand("feasible", "Necessary conditions for HSD(3^n u^1)");
    std::uint64_t fn = 0, fu = 0;
    feasible->add_option("n", fn)->required();
    feasible->add_option("u", fu)->required();
    feasible->callback([&] {
        auto r = hsd::is_feasible(fn, fu);
        std::cout << r.describe() << "\n";
        code = r.feasible ? Ok : Invalid;
    });

    auto* catalog = app.add_subcommand("catalog", "Embedded starter catalog");
    catalog->require_subcommand(1);
    std::string catalog_dir;
    catalog->add_option("--dir", catalog_dir, "Load the catalog from a data directory instead");
    auto current_catalog = [&]() -> const hsd::Catalog& {
        static hsd::Catalog loaded;
        if (catalog_dir.empty()) return hsd::Catalog::embedded();
        loaded = hsd::Catalog::load_directory(catalog_dir);
        return loaded;
    };
    auto* cat_list = catalog->add_subcommand("list", "List entries");
    std::string filter;
    cat_list->add_option("filter", filter, "Substring of the id");
    cat_list->callback([&] {
        for (const auto* e : current_catalog().list(filter))
            std::cout << e->id << "\t" << e->type().to_string() << "\t" << hsd::to_string(e->status) << "\t"
                      << e->file << "\n";
    });
    auto* cat_get = catalog->add_subcommand("get", "Print an entry");
    std::string id;
    bool developed = false;
    cat_get->add_option("id", id)->required();
    cat_get->add_option("-o,--output", out_path);
    cat_get->add_flag("--develop", developed, "Print the developed design");
    cat_get->callback([&] {
        const auto& e = current_catalog().get(id);
        if (!e.note.empty()) std::cerr << "note: " << e.note << "\n";
        if (developed)
            write_output(out_path, hsd::format_design(e.design()));
        else if (e.is_starter())
            write_output(out_path, hsd::format_starter(std::get<hsd::StarterSet>(e.content)));
        else if (e.is_design())
            write_output(out_path, hsd::format_design(std::get<hsd::Design>(e.content)));
        else
            write_output(out_path, hsd::format_gdd(std::get<hsd::Gdd>(e.content)));
    });
    auto* cat_verify = catalog->add_subcommand("verify-all", "Develop and verify every entry");
    cat_verify->callback([&] {
        auto r = hsd::catalog_verify_all(current_catalog());
        for (const auto& e : r.entries) {
            std::cout << (e.pass ? "PASS " : "FAIL ") << e.id << " [" << hsd::to_string(e.status) << "] " << e.blocks
                      << "/" << e.expected_blocks << " blocks";
            if (!e.short_orbits.empty()) {
                std::cout << ", short orbits:";
                for (auto l : e.short_orbits) std::cout << ' ' << l;
            }
            if (!e.markers_consistent) std::cout << ", marked short orbits not detected";
            if (!e.pass) std::cout << " -- " << e.detail;
            std::cout << "\n";
        }
        std::size_t passed = std::count_if(r.entries.begin(), r.entries.end(), [](const auto& e) { return e.pass; });
        std::cout << passed << "/" << r.entries.size() << " entries pass in " << r.seconds << " s\n";
        code = r.pass ? Ok : Invalid;
    });

    auto* prove = app.add_subcommand("prove", "Find a construction recipe for a type");
    std::string type_text;
    bool materialize = false, large = false;
    prove->add_option("type", type_text, "e.g. \"3^12 4^1\"")->required();
    prove->add_flag("--materialize", materialize, "Build and certify the design");
    prove->add_flag("--large", large, "Lift the materialization cap");
    prove->add_option("-o,--output", out_path, "Write the materialized design");
    prove->callback([&] {
        hsd::ProverOptions opts;
        opts.mode = materialize ? hsd::ProveMode::Materialize : hsd::ProveMode::Plan;
        if (large) opts.max_points = 0;
        hsd::Prover prover(opts);
        auto v = prover.prove_type(hsd::TypeSpec::parse(type_text));
        std::cout << hsd::to_string(v.kind);
        if (!v.reason.empty()) std::cout << ": " << v.reason;
        std::cout << "\n";
        if (v.recipe) std::cout << v.recipe->to_string();
        if (v.design) {
            std::cout << "certified: " << hsd::verify_design(*v.design).summary() << "\n";
            if (!out_path.empty()) write_output(out_path, hsd::format_design(*v.design));
        }
        code = v.kind == hsd::VerdictKind::Exists ? Ok : v.kind == hsd::VerdictKind::Infeasible ? Invalid : Unknown;
    });

    auto* table = app.add_subcommand("table", "Existence table for HSD(3^n u^1)");
    std::uint64_t nmax = 13, umax = 15;
    std::string csv_path;
    table->add_option("--nmax", nmax);
    table->add_option("--umax", umax);
    table->add_flag("--materialize", materialize, "Build and certify every EXISTS cell");
    table->add_option("--csv", csv_path, "Also write CSV");
    table->callback([&] {
        hsd::ProverOptions opts;
        opts.mode = materialize ? hsd::ProveMode::Materialize : hsd::ProveMode::Plan;
        auto t = hsd::existence_table(nmax, umax, opts, threads);
        std::cout << t.to_text();
        if (!csv_path.empty()) write_output(csv_path, t.to_csv());
    });

    auto* search = app.add_subcommand("search", "Backtracking searches");
    search->require_subcommand(1);
    std::uint32_t step = 1;
    double seconds = 60;
    std::uint64_t nodes = 0, seed = 0;
    std::string proof_path;
    auto common = [&](CLI::App* c) {
        c->add_option("--type", type_text)->required();
        c->add_option("--budget", seconds, "Seconds (0 = unlimited)");
        c->add_option("--nodes", nodes, "Node limit (0 = unlimited)");
        c->add_option("--seed", seed, "Shuffle row order");
        c->add_option("-o,--output", out_path);
    };
    auto report = [&](const auto& r) {
        std::cerr << hsd::to_string(r.status) << ": " << r.items << " items, " << r.rows << " rows, " << r.nodes
                  << " nodes\n";
        code = search_exit(r.status);
    };
    auto* s_starter = search->add_subcommand("starter", "Cyclic starter blocks");
    common(s_starter);
    s_starter->add_option("--step", step);
    s_starter->callback([&] {
        auto r = hsd::search_starters(hsd::TypeSpec::parse(type_text), step,
                                      budget_of(seconds, nodes, seed, s_starter->count("--seed") > 0, threads));
        report(r);
        if (r.value) write_output(out_path, hsd::format_starter(*r.value));
    });
    auto* s_direct = search->add_subcommand("direct", "Exhaustive search over single blocks");
    common(s_direct);
    s_direct->add_option("--proof-log", proof_path, "Write the branch log");
    s_direct->callback([&] {
        std::ofstream log;
        if (!proof_path.empty()) {
            log.open(proof_path);
            if (!log) throw IoError("cannot write " + proof_path);
        }
        auto r = hsd::search_direct(hsd::TypeSpec::parse(type_text),
                                    budget_of(seconds, nodes, seed, s_direct->count("--seed") > 0, threads),
                                    proof_path.empty() ? nullptr : &log);
        report(r);
        if (r.value) write_output(out_path, hsd::format_design(*r.value));
    });
    auto* s_gdd = search->add_subcommand("gdd", "Cyclic 4-GDD of type h^n u^1");
    common(s_gdd);
    s_gdd->add_option("--step", step);
    std::uint32_t inf_cycle = 1;
    s_gdd->add_option("--infinite-cycle", inf_cycle, "Length of the cycles the step induces on infinite points");
    s_gdd->callback([&] {
        std::uint32_t h = 0, n = 0, u = 0;
        if (!hsd::cyclic_shape(hsd::TypeSpec::parse(type_text), h, n, u))
            throw hsd::UnsupportedError("type must be h^n or h^n u^1");
        auto r = hsd::search_gdd(h, n, u, step, budget_of(seconds, nodes, seed, s_gdd->count("--seed") > 0, threads),
                                 inf_cycle);
        report(r);
        if (r.value) write_output(out_path, hsd::format_gdd(*r.value));
    });

    auto* multiply = app.add_subcommand("multiply", "Inflate every point by m using an orthogonal Latin square pair");
    std::uint32_t m = 3;
    multiply->add_option("file", in_path)->required();
    multiply->add_option("m", m)->required();
    multiply->add_option("-o,--output", out_path);
    multiply->callback([&] { write_output(out_path, hsd::format_design(hsd::multiply(load_design(in_path), m))); });

    auto* fill = app.add_subcommand("fill", "Fill holes of an outer design with ingredient designs");
    fill->require_subcommand(1);
    hsd::FillParams fp;
    std::string inner_path, inner_t_path;
    auto fill_common = [&](CLI::App* c) {
        c->set_help_flag("--help", "Print this help message and exit");
        c->add_option("outer", in_path)->required();
        c->add_option("inner", inner_path, "Ingredient of type h^s v^1")->required();
        c->add_option("--h", fp.h)->required();
        c->add_option("--s", fp.s)->required();
        c->add_option("--v", fp.v);
        c->add_option("--w", fp.w);
        c->add_option("-o,--output", out_path);
    };
    auto* fill_a = fill->add_subcommand("a", "Outer (hs)^m w^1");
    fill_common(fill_a);
    fill_a->callback([&] {
        write_output(out_path, hsd::format_design(hsd::fill_holes_a(load_design(in_path), load_design(inner_path), fp)));
    });
    auto* fill_b = fill->add_subcommand("b", "Outer (hs)^m (ht)^1 w^1");
    fill_common(fill_b);
    fill_b->add_option("inner_t", inner_t_path, "Ingredient of type h^t v^1")->required();
    fill_b->add_option("--t", fp.t)->required();
    fill_b->callback([&] {
        write_output(out_path, hsd::format_design(hsd::fill_holes_b(load_design(in_path), load_design(inner_path),
                                                                     load_design(inner_t_path), fp)));
    });

    auto* convert = app.add_subcommand("convert", "Convert between representations");
    convert->require_subcommand(1);
    auto* quasi = convert->add_subcommand("quasigroup", "Print the frame quasigroup table");
    quasi->add_option("file", in_path)->required();
    quasi->add_option("-o,--output", out_path);
    quasi->callback([&] { write_output(out_path, hsd::to_quasigroup(load_design(in_path)).to_string()); });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        auto rc = app.exit(e);
        return rc == 0 ? Ok : Usage;
    }
    catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    }
    catch (const hsd::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return Usage;
    }
    catch (const hsd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Invalid;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    }
    return code;
}
