#include "gsig/catalog.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gsig {

using json = nlohmann::ordered_json;

namespace {

const std::set<std::string> kKnownKeys = {"name",    "chi",     "sigma",
                                          "spin",    "minimal", "h1_zero",
                                          "flags",   "note"};

CatalogEntry parse_entry(const json& record, std::size_t index) {
    const std::string where = "catalog entry #" + std::to_string(index);
    if (!record.is_object())
        throw std::runtime_error(where + ": expected an object");
    for (const auto& [key, _] : record.items())
        if (!kKnownKeys.contains(key))
            throw std::runtime_error(where + ": unknown field '" + key + "'");

    auto require = [&](const char* key) -> const json& {
        if (!record.contains(key))
            throw std::runtime_error(where + ": missing field '" + key + "'");
        return record.at(key);
    };

    CatalogEntry entry;
    ManifoldInvariants& m = entry.manifold;
    try {
        m.name = require("name").get<std::string>();
        m.chi = require("chi").get<std::int64_t>();
        m.sigma = require("sigma").get<std::int64_t>();
        m.spin = require("spin").get<bool>();
        m.minimal = require("minimal").get<bool>();
        m.h1_zero = record.value("h1_zero", true);
        m.star = star_evidence_from_names(
            require("flags").get<std::vector<std::string>>());
        entry.note = record.value("note", std::string{});
    } catch (const json::exception& e) {
        throw std::runtime_error(where + ": " + e.what());
    }
    m.validate();
    // Rejects contradictory flags up front; the star verdict itself is
    // recomputed wherever it is needed.
    derive_star(m.star, m);
    return entry;
}

}  // namespace

std::vector<CatalogEntry> load_catalog(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("catalog parse error: ") + e.what());
    }
    if (!doc.is_array())
        throw std::runtime_error("catalog document must be a JSON array");
    std::vector<CatalogEntry> entries;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        CatalogEntry entry = parse_entry(doc[i], i);
        if (!seen.insert(entry.manifold.name).second)
            throw std::runtime_error("catalog: duplicate entry name '" +
                                     entry.manifold.name + "'");
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open catalog file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_catalog(buf.str());
}

std::string serialize_catalog(const std::vector<CatalogEntry>& entries) {
    json doc = json::array();
    for (const auto& entry : entries) {
        const ManifoldInvariants& m = entry.manifold;
        json record;
        record["name"] = m.name;
        record["chi"] = m.chi;
        record["sigma"] = m.sigma;
        record["spin"] = m.spin;
        record["minimal"] = m.minimal;
        record["h1_zero"] = m.h1_zero;
        record["flags"] = star_flag_names(m.star);
        record["note"] = entry.note;
        doc.push_back(std::move(record));
    }
    return doc.dump(2) + "\n";
}

std::vector<CatalogEntry> seed_catalog() {
    return load_catalog(seed_catalog_text());
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries,
                               std::string_view name) {
    for (const auto& entry : entries)
        if (entry.manifold.name == name)
            return &entry;
    return nullptr;
}

}  // namespace gsig
