#pragma once

#include "gsig/manifold.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gsig {

/// Catalog record: invariants plus a free-text provenance note. Star status
/// is always recomputed from the stored flags, never read from the file.
struct CatalogEntry {
    ManifoldInvariants manifold;
    std::string note;
};

// Parses and validates a catalog document (a JSON array of records with
// fields name/chi/sigma/spin/minimal/h1_zero/flags/note). Throws
// std::runtime_error with entry and field diagnostics on parse errors,
// std::domain_error naming the failing invariant on bad values.
std::vector<CatalogEntry> load_catalog(const std::string& text);

std::vector<CatalogEntry> load_catalog_file(const std::string& path);

// Canonical serialization; load followed by serialize is a fixed point.
std::string serialize_catalog(const std::vector<CatalogEntry>& entries);

// The built-in seed catalog shipped with the library.
const std::string& seed_catalog_text();
std::vector<CatalogEntry> seed_catalog();

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries,
                               std::string_view name);

}  // namespace gsig
