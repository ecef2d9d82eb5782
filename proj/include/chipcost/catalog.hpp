#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "chipcost/core.hpp"

namespace chipcost {

/// Where a resolved catalog value came from.
struct ProvenanceEntry {
    std::string key;     ///< e.g. "nodes.7nm.cluster_param"
    std::string source;  ///< "document", "default" or "override"
    std::string note;    ///< free text: origin file, literature tag, calibration
};

struct Catalog {
    std::map<std::string, NodeRef> nodes;
    std::map<std::string, TechRef> techs;
    std::vector<ProvenanceEntry> provenance;

    const NodeRef& node(const std::string& name, const std::string& path = {}) const;
    const TechRef& tech(const std::string& name, const std::string& path = {}) const;

    /// The technology of the given kind with the lexicographically first name.
    TechRef first_tech_of_kind(TechKind kind) const;
};

/// Value equality of nodes and technologies; provenance is not compared.
bool same_contents(const Catalog& a, const Catalog& b);

/// Parses a catalog document. Omitted optional fields take documented
/// defaults, each recorded in the provenance ledger. An optional top-level
/// "provenance" object maps value keys to notes.
Catalog load_catalog(const nlohmann::json& doc, const std::string& origin = "document");

Catalog load_catalog_file(const std::filesystem::path& path);

/// The shipped default catalog (data/default_catalog.json, compiled in).
Catalog default_catalog();

/// Serializes with every default applied; loading the result reproduces the
/// catalog exactly.
nlohmann::json catalog_to_json(const Catalog& catalog);

/// Layers field-level overrides ({"nodes": {...}, "techs": {...}}) onto a base
/// catalog. Overridden values are tagged "override" in the provenance ledger.
Catalog apply_overrides(const Catalog& base, const nlohmann::json& overrides, const std::string& origin);

/// Multiplies every currency-valued field by `factor`.
Catalog scale_costs(const Catalog& catalog, double factor);

nlohmann::json provenance_to_json(const std::vector<ProvenanceEntry>& ledger);

}  // namespace chipcost
