#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyatlas/canonical.hpp"
#include "polyatlas/io.hpp"

namespace polyatlas {

struct CatalogEntry {
    CanonicalForm form;
    int dim = 0;
    std::vector<int> f_vector;
    int excess = 0;
    bool simple = false;
    bool semisimple = false;
    int pyramid_fold = 0;
    int shephard_count = 0;
    std::string provenance;
    std::vector<std::string> notes;  // further provenances of the same type
    std::optional<std::string> verdict;
    Polytope polytope;
};

CatalogEntry make_entry(const Polytope& p);
Json entry_to_json(const CatalogEntry& e);
CatalogEntry entry_from_json(const Json& j);

// Entries deduplicated by canonical form, kept in insertion order.
class Catalog {
public:
    // Returns true when `p` is a new type; otherwise its provenance is noted
    // on the existing entry.
    bool insert(const Polytope& p, std::optional<std::string> verdict = std::nullopt);
    bool insert(CatalogEntry e);

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }
    const CatalogEntry* find(const CanonicalForm& f) const;
    CatalogEntry* find(const CanonicalForm& f);

    // Deterministic order: dimension, f-vector, canonical code.
    std::vector<const CatalogEntry*> sorted() const;

private:
    std::vector<CatalogEntry> entries_;
    std::map<std::string, size_t> index_;
};

// Appends one line per entry.
void catalog_store(const Catalog& c, const std::string& path);

struct CatalogLoad {
    Catalog catalog;
    int warnings = 0;
    std::vector<std::string> messages;
};

// Corrupt lines are skipped and counted.
CatalogLoad catalog_load(const std::string& path);

}  // namespace polyatlas
