#pragma once

#include "hsd/design.hpp"
#include "hsd/development.hpp"
#include "hsd/gdd.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace hsd {

enum class EntryStatus { Verbatim, Repaired, Derived };
const char* to_string(EntryStatus s);

struct CatalogEntry {
    std::string id;     // e.g. "A2/3^13 2^1"
    std::string file;   // path under data/
    std::string source; // table group id (A4, C2, ...) or the search that produced it
    EntryStatus status = EntryStatus::Verbatim;
    std::string note;
    std::uint32_t checksum = 0;          // crc32 recorded in the manifest
    std::uint32_t computed_checksum = 0; // crc32 of the bytes actually loaded
    std::variant<StarterSet, Design, Gdd> content;

    bool is_starter() const { return std::holds_alternative<StarterSet>(content); }
    bool is_design() const { return std::holds_alternative<Design>(content); }
    bool is_gdd() const { return std::holds_alternative<Gdd>(content); }
    TypeSpec type() const;
    /// Developed design for starter/design entries. Throws for GDD entries.
    Design design() const;
};

class Catalog {
public:
    /// The catalog embedded in the library at build time.
    static const Catalog& embedded();
    /// Loads a manifest and the files it names from a directory.
    static Catalog load_directory(const std::string& dir);

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    /// Throws Error for unknown ids.
    const CatalogEntry& get(const std::string& id) const;
    const CatalogEntry* find(const std::string& id) const;
    /// Entries whose id contains `filter` (all when empty).
    std::vector<const CatalogEntry*> list(const std::string& filter = {}) const;
    /// First HSD entry (starter or design) of the given type, or nullptr.
    const CatalogEntry* find_hsd(const TypeSpec& t) const;
    /// First GDD entry of the given type with block size 4 and lambda 1, or nullptr.
    const CatalogEntry* find_gdd4(const TypeSpec& t) const;

    static Catalog from_files(const std::string& manifest, const std::vector<std::pair<std::string, std::string>>& files);

private:
    std::vector<CatalogEntry> entries_;
};

struct EntryReport {
    std::string id;
    EntryStatus status = EntryStatus::Verbatim;
    bool pass = false;
    bool checksum_ok = false;
    std::size_t blocks = 0;
    std::size_t expected_blocks = 0;
    /// Short orbit lengths for starter entries (full orbits omitted).
    std::vector<std::uint32_t> short_orbits;
    std::size_t full_orbits = 0;
    bool markers_consistent = true;
    std::string detail;
};

struct CatalogReport {
    bool pass = false;
    std::vector<EntryReport> entries;
    double seconds = 0;
};

CatalogReport catalog_verify_all(const Catalog& c = Catalog::embedded());
EntryReport catalog_verify_entry(const CatalogEntry& e);

/// crc32 of the given bytes.
std::uint32_t checksum(const std::string& bytes);

} // namespace hsd
