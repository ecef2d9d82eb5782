#pragma once

// The spec document: modules, chiplets and systems built on a catalog, plus
// optional sections that drive each CLI command. See docs/schema.md.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chipcost/catalog.hpp"
#include "chipcost/core.hpp"
#include "chipcost/reuse.hpp"

namespace chipcost {

struct Document {
    Catalog catalog;  ///< base catalog with the document's "catalog" overrides applied
    std::map<std::string, ModuleSpec> modules;
    std::map<std::string, ChipletRef> chiplets;
    std::vector<SystemSpec> systems;  ///< document order
    nlohmann::json source;

    const SystemSpec& system(const std::string& name, const std::string& path) const;
    bool has_section(const std::string& key) const { return source.contains(key); }
};

Document load_document(const nlohmann::json& doc, const Catalog& base, const std::string& origin = "spec");

Document load_document_file(const std::string& path, const Catalog& base);

nlohmann::json read_json_file(const std::string& path);

struct ComparePair {
    std::string soc;
    std::string multi;
};

/// "compare": [{"soc": ..., "multi": ...}, ...]
std::vector<ComparePair> parse_compare(const Document& doc);

struct SweepRequest {
    double module_area = 0.0;
    NodeRef node;
    std::vector<int> counts;
    std::vector<TechRef> techs;
    double d2d_area_fraction = 0.1;
};

SweepRequest parse_sweep(const Document& doc);

struct ReuseRequest {
    ReuseScenario scenario;
    TechRef soc_tech;  ///< when set, the SoC-equivalent family is analyzed too
};

ReuseRequest parse_reuse(const Document& doc);

struct CurvesRequest {
    std::vector<NodeRef> nodes;
    double area_min = 10.0;
    double area_max = 900.0;
    double step = 10.0;
};

/// Missing section: every catalog node except interposer-only ones.
CurvesRequest parse_curves(const Document& doc);

struct BreakEvenRequest {
    std::string soc;
    std::string multi;
    std::int64_t min_quantity = 1;
    std::int64_t max_quantity = 100'000'000;
};

BreakEvenRequest parse_break_even(const Document& doc);

}  // namespace chipcost
