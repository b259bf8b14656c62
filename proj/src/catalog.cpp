#include "hsd/catalog.hpp"

#include "hsd/errors.hpp"
#include "hsd/verify.hpp"
#include "text_format.hpp"

#include <zlib.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace hsd {

namespace detail {
const std::vector<std::pair<std::string, std::string>>& embedded_files();
}

const char* to_string(EntryStatus s)
{
    switch (s) {
    case EntryStatus::Verbatim: return "verbatim";
    case EntryStatus::Repaired: return "repaired";
    case EntryStatus::Derived: return "derived";
    }
    return "?";
}

std::uint32_t checksum(const std::string& bytes)
{
    return static_cast<std::uint32_t>(
        crc32(crc32(0L, Z_NULL, 0), reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size())));
}

TypeSpec CatalogEntry::type() const
{
    if (auto s = std::get_if<StarterSet>(&content)) return s->type();
    if (auto d = std::get_if<Design>(&content)) return d->declared_type;
    return std::get<Gdd>(content).type();
}

Design CatalogEntry::design() const
{
    if (auto s = std::get_if<StarterSet>(&content)) return develop(*s);
    if (auto d = std::get_if<Design>(&content)) return *d;
    throw Error("catalog entry " + id + " is a GDD, not an HSD");
}

namespace {

EntryStatus parse_status(const std::string& s, std::size_t line)
{
    if (s == "verbatim") return EntryStatus::Verbatim;
    if (s == "repaired") return EntryStatus::Repaired;
    if (s == "derived") return EntryStatus::Derived;
    throw ParseError("unknown catalog status '" + s + "'", line);
}

std::vector<std::string> split_tabs(const std::string& line)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto tab = line.find('\t', start);
        out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
    }
    return out;
}

bool ends_with(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

// Manifest: one entry per line, tab-separated: id, file, status, source, crc32 (hex), note.
Catalog Catalog::from_files(const std::string& manifest, const std::vector<std::pair<std::string, std::string>>& files)
{
    Catalog c;
    std::istringstream in(manifest);
    std::string line;
    std::size_t number = 0;
    std::set<std::string> ids;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty() || line[0] == '#') continue;
        auto f = split_tabs(line);
        if (f.size() < 5) throw ParseError("manifest line needs at least 5 fields", number);
        CatalogEntry e;
        e.id = f[0];
        e.file = f[1];
        e.status = parse_status(f[2], number);
        e.source = f[3];
        e.checksum = static_cast<std::uint32_t>(std::stoul(f[4], nullptr, 16));
        if (f.size() > 5) e.note = f[5];
        if (!ids.insert(e.id).second) throw ParseError("duplicate catalog id '" + e.id + "'", number);
        auto it = std::find_if(files.begin(), files.end(), [&](const auto& p) { return p.first == e.file; });
        if (it == files.end()) throw Error("catalog file '" + e.file + "' is missing");
        e.computed_checksum = checksum(it->second);
        try {
            if (ends_with(e.file, ".starter"))
                e.content = parse_starter(it->second);
            else if (ends_with(e.file, ".design"))
                e.content = parse_design(it->second);
            else if (ends_with(e.file, ".gdd"))
                e.content = parse_gdd(it->second);
            else
                throw ParseError("unknown catalog file kind '" + e.file + "'", number);
        }
        catch (const ParseError& err) {
            throw ParseError(e.file + ": " + err.what());
        }
        c.entries_.push_back(std::move(e));
    }
    return c;
}

const Catalog& Catalog::embedded()
{
    static const Catalog c = [] {
        const auto& files = detail::embedded_files();
        auto it = std::find_if(files.begin(), files.end(), [](const auto& p) { return p.first == "MANIFEST.tsv"; });
        if (it == files.end()) throw Error("embedded catalog has no manifest");
        return from_files(it->second, files);
    }();
    return c;
}

Catalog Catalog::load_directory(const std::string& dir)
{
    namespace fs = std::filesystem;
    std::vector<std::pair<std::string, std::string>> files;
    auto read = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        if (!in) throw Error("cannot open " + p.string());
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    };
    for (const auto& entry : fs::recursive_directory_iterator(dir))
        if (entry.is_regular_file())
            files.emplace_back(fs::relative(entry.path(), dir).generic_string(), read(entry.path()));
    auto it = std::find_if(files.begin(), files.end(), [](const auto& p) { return p.first == "MANIFEST.tsv"; });
    if (it == files.end()) throw Error(dir + " has no MANIFEST.tsv");
    return from_files(it->second, files);
}

const CatalogEntry* Catalog::find(const std::string& id) const
{
    for (const auto& e : entries_)
        if (e.id == id) return &e;
    return nullptr;
}

const CatalogEntry& Catalog::get(const std::string& id) const
{
    if (auto e = find(id)) return *e;
    throw Error("unknown catalog id '" + id + "'");
}

std::vector<const CatalogEntry*> Catalog::list(const std::string& filter) const
{
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries_)
        if (filter.empty() || e.id.find(filter) != std::string::npos) out.push_back(&e);
    return out;
}

const CatalogEntry* Catalog::find_hsd(const TypeSpec& t) const
{
    for (const auto& e : entries_)
        if (!e.is_gdd() && e.type() == t) return &e;
    return nullptr;
}

const CatalogEntry* Catalog::find_gdd4(const TypeSpec& t) const
{
    for (const auto& e : entries_) {
        if (!e.is_gdd()) continue;
        const auto& g = std::get<Gdd>(e.content);
        if (g.lambda == 1 && g.block_sizes() == std::set<std::size_t>{4} && g.type() == t) return &e;
    }
    return nullptr;
}

EntryReport catalog_verify_entry(const CatalogEntry& e)
{
    EntryReport r;
    r.id = e.id;
    r.status = e.status;
    r.checksum_ok = e.checksum == e.computed_checksum;
    try {
        if (const auto* g = std::get_if<Gdd>(&e.content)) {
            auto rep = verify_gdd(*g);
            r.pass = rep.pass;
            r.blocks = g->blocks.size();
            r.detail = "gdd " + rep.summary();
        }
        else {
            r.expected_blocks = expected_block_count(e.type());
            if (const auto* s = std::get_if<StarterSet>(&e.content)) {
                auto lengths = orbit_lengths(*s);
                std::set<std::size_t> detected;
                for (std::size_t i = 0; i < lengths.size(); ++i) {
                    if (lengths[i] < s->group_order()) {
                        r.short_orbits.push_back(lengths[i]);
                        detected.insert(i);
                    }
                    else
                        ++r.full_orbits;
                }
                for (auto m : s->marked_short) r.markers_consistent &= detected.count(m) > 0;
            }
            auto rep = verify_design(e.design());
            r.blocks = rep.block_count;
            r.pass = rep.pass && r.blocks == r.expected_blocks;
            r.detail = rep.summary();
        }
    }
    catch (const Error& err) {
        r.pass = false;
        r.detail = err.what();
    }
    if (!r.checksum_ok) {
        r.pass = false;
        r.detail += "; checksum mismatch";
    }
    return r;
}

CatalogReport catalog_verify_all(const Catalog& c)
{
    auto start = std::chrono::steady_clock::now();
    CatalogReport r;
    r.entries.resize(c.entries().size());
    const auto n = static_cast<std::int64_t>(c.entries().size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) r.entries[i] = catalog_verify_entry(c.entries()[i]);
    r.pass = std::all_of(r.entries.begin(), r.entries.end(), [](const EntryReport& e) { return e.pass; });
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace hsd
