#include "chipcost/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "chipcost/error.hpp"
#include "chipcost/format.hpp"
#include "default_catalog_data.hpp"

namespace chipcost {

using nlohmann::json;

namespace {

constexpr double kDefaultClusterParam = 3.0;
constexpr double kDefaultWaferDiameter = 300.0;
constexpr double kDefaultEdgeExclusion = 3.0;
constexpr double kDefaultSubstrateYield = 0.98;
constexpr double kDefaultChipBondYield = 0.99;
constexpr double kDefaultMcmGrowthFactor = 1.5;
constexpr double kDefaultInterposerAreaFactor = 1.1;
constexpr double kDefaultRdlCostScale = 0.4;

const std::set<std::string> kNodeKeys = {
    "defect_density_per_cm2", "defect_density_per_mm2", "cluster_param",     "wafer_cost",
    "wafer_diameter_mm",      "edge_exclusion_mm",      "die_test_cost",     "nre_module_per_mm2",
    "nre_chip_per_mm2",       "nre_chip_fixed",         "nre_d2d"};

const std::set<std::string> kTechKeys = {
    "kind",           "substrate_cost_per_mm2", "substrate_growth_factor", "substrate_yield",
    "chip_bond_yield", "bond_cost_per_chip",    "interposer_node",         "interposer_cost_scale",
    "interposer_area_factor", "package_nre_per_mm2", "package_nre_fixed"};

bool is_annotation(const std::string& key) { return !key.empty() && key.front() == '_'; }

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        if (is_annotation(key) || allowed.contains(key)) continue;
        throw Error(ErrorCode::ParseError, "unknown key '" + key + "'", path + "." + key);
    }
}

// Reads fields of one catalog entry and records their provenance.
class FieldReader {
public:
    FieldReader(const json& obj, std::string path, const std::map<std::string, std::string>& notes,
                std::vector<ProvenanceEntry>& ledger, const std::string& origin)
        : obj_(obj), path_(std::move(path)), notes_(notes), ledger_(ledger), origin_(origin) {}

    bool has(const std::string& key) const { return obj_.contains(key); }

    double number(const std::string& key, const std::string& canonical) const {
        const json& v = obj_.at(key);
        if (!v.is_number()) {
            throw Error(ErrorCode::ParseError, "expected a number", path_ + "." + key);
        }
        record(canonical, "document");
        return v.get<double>();
    }

    double required(const std::string& key) const {
        if (!has(key)) throw Error(ErrorCode::ParseError, "missing required key '" + key + "'", path_ + "." + key);
        return number(key, key);
    }

    double optional(const std::string& key, double fallback) const {
        if (has(key)) return number(key, key);
        record(key, "default", "applied default " + format_number(fallback));
        return fallback;
    }

    std::string text(const std::string& key) const {
        const json& v = obj_.at(key);
        if (!v.is_string()) throw Error(ErrorCode::ParseError, "expected a string", path_ + "." + key);
        record(key, "document");
        return v.get<std::string>();
    }

    const std::string& path() const { return path_; }

private:
    void record(const std::string& field, const std::string& source, std::string note = {}) const {
        const std::string key = path_ + "." + field;
        if (note.empty()) {
            auto it = notes_.find(key);
            note = it != notes_.end() ? it->second : origin_;
        }
        ledger_.push_back({key, source, std::move(note)});
    }

    const json& obj_;
    std::string path_;
    const std::map<std::string, std::string>& notes_;
    std::vector<ProvenanceEntry>& ledger_;
    const std::string& origin_;
};

ProcessNode parse_node(const std::string& name, const FieldReader& r, const json& obj) {
    check_keys(obj, kNodeKeys, r.path());
    ProcessNode n;
    n.name = name;
    const bool per_cm2 = r.has("defect_density_per_cm2");
    const bool per_mm2 = r.has("defect_density_per_mm2");
    if (per_cm2 == per_mm2) {
        throw Error(ErrorCode::ParseError,
                    "give exactly one of defect_density_per_cm2 or defect_density_per_mm2",
                    r.path() + ".defect_density_per_cm2");
    }
    n.defect_density = per_cm2 ? r.number("defect_density_per_cm2", "defect_density") / kMm2PerCm2
                               : r.number("defect_density_per_mm2", "defect_density");
    n.cluster_param = r.optional("cluster_param", kDefaultClusterParam);
    n.wafer_cost = r.required("wafer_cost");
    n.wafer_diameter = r.optional("wafer_diameter_mm", kDefaultWaferDiameter);
    n.edge_exclusion = r.optional("edge_exclusion_mm", kDefaultEdgeExclusion);
    n.die_test_cost = r.optional("die_test_cost", 0.0);
    n.nre_module_factor = r.optional("nre_module_per_mm2", 0.0);
    n.nre_chip_factor = r.optional("nre_chip_per_mm2", 0.0);
    n.fixed_chip_nre = r.optional("nre_chip_fixed", 0.0);
    n.d2d_nre_cost = r.optional("nre_d2d", 0.0);
    n.validate();
    return n;
}

IntegrationTech parse_tech(const std::string& name, const FieldReader& r, const json& obj,
                           const std::map<std::string, NodeRef>& nodes) {
    check_keys(obj, kTechKeys, r.path());
    IntegrationTech t;
    t.name = name;
    if (!r.has("kind")) throw Error(ErrorCode::ParseError, "missing required key 'kind'", r.path() + ".kind");
    const std::string kind = r.text("kind");
    auto parsed = parse_tech_kind(kind);
    if (!parsed) {
        throw Error(ErrorCode::ParseError,
                    "unknown technology kind '" + kind +
                        "' (expected monolithic, mcm, info-chip-first, info-chip-last or 2.5d)",
                    r.path() + ".kind");
    }
    t.kind = *parsed;
    t.substrate_cost_per_area = r.required("substrate_cost_per_mm2");
    t.substrate_growth_factor =
        r.optional("substrate_growth_factor", t.kind == TechKind::MCM ? kDefaultMcmGrowthFactor : 1.0);
    t.substrate_yield = r.optional("substrate_yield", kDefaultSubstrateYield);
    t.chip_bond_yield = r.optional("chip_bond_yield", kDefaultChipBondYield);
    t.bond_cost_per_chip = r.optional("bond_cost_per_chip", 0.0);
    t.interposer_cost_scale = r.optional("interposer_cost_scale", t.is_info() ? kDefaultRdlCostScale : 1.0);
    t.interposer_area_factor = r.optional("interposer_area_factor", kDefaultInterposerAreaFactor);
    t.package_nre_factor = r.optional("package_nre_per_mm2", 0.0);
    t.package_fixed_nre = r.optional("package_nre_fixed", 0.0);
    if (r.has("interposer_node")) {
        const std::string node = r.text("interposer_node");
        if (!t.has_interposer()) {
            throw Error(ErrorCode::InvariantViolation, "only InFO and 2.5D technologies take an interposer node",
                        r.path() + ".interposer_node");
        }
        auto it = nodes.find(node);
        if (it == nodes.end()) {
            throw Error(ErrorCode::UnknownNodeReference, "unknown process node '" + node + "'",
                        r.path() + ".interposer_node");
        }
        t.interposer_node = it->second;
    }
    t.validate();
    return t;
}

}  // namespace

const NodeRef& Catalog::node(const std::string& name, const std::string& path) const {
    auto it = nodes.find(name);
    if (it == nodes.end()) {
        throw Error(ErrorCode::UnknownNodeReference, "unknown process node '" + name + "'", path);
    }
    return it->second;
}

const TechRef& Catalog::tech(const std::string& name, const std::string& path) const {
    auto it = techs.find(name);
    if (it == techs.end()) {
        throw Error(ErrorCode::UnknownReference, "unknown integration technology '" + name + "'", path);
    }
    return it->second;
}

TechRef Catalog::first_tech_of_kind(TechKind kind) const {
    for (const auto& [name, t] : techs) {
        if (t->kind == kind) return t;
    }
    return nullptr;
}

bool same_contents(const Catalog& a, const Catalog& b) {
    if (a.nodes.size() != b.nodes.size() || a.techs.size() != b.techs.size()) return false;
    for (const auto& [name, n] : a.nodes) {
        auto it = b.nodes.find(name);
        if (it == b.nodes.end() || !(*it->second == *n)) return false;
    }
    for (const auto& [name, t] : a.techs) {
        auto it = b.techs.find(name);
        if (it == b.techs.end() || !same_definition(*it->second, *t)) return false;
    }
    return true;
}

Catalog load_catalog(const json& doc, const std::string& origin) {
    if (!doc.is_object() || doc.empty()) {
        throw Error(ErrorCode::ParseError, "catalog document is empty", "catalog");
    }
    check_keys(doc, {"nodes", "techs", "provenance"}, "catalog");
    if (!doc.contains("nodes") || !doc["nodes"].is_object() || doc["nodes"].empty()) {
        throw Error(ErrorCode::ParseError, "catalog defines no process nodes", "nodes");
    }

    std::map<std::string, std::string> notes;
    if (doc.contains("provenance")) {
        if (!doc["provenance"].is_object()) {
            throw Error(ErrorCode::ParseError, "provenance must be an object", "provenance");
        }
        for (const auto& [key, value] : doc["provenance"].items()) {
            if (!value.is_string()) throw Error(ErrorCode::ParseError, "expected a string", "provenance." + key);
            notes[key] = value.get<std::string>();
        }
    }

    Catalog cat;
    for (const auto& [name, obj] : doc["nodes"].items()) {
        if (is_annotation(name)) continue;
        const std::string path = "nodes." + name;
        if (!obj.is_object()) throw Error(ErrorCode::ParseError, "expected an object", path);
        FieldReader reader(obj, path, notes, cat.provenance, origin);
        cat.nodes[name] = std::make_shared<const ProcessNode>(parse_node(name, reader, obj));
    }
    if (doc.contains("techs")) {
        if (!doc["techs"].is_object()) throw Error(ErrorCode::ParseError, "expected an object", "techs");
        for (const auto& [name, obj] : doc["techs"].items()) {
            if (is_annotation(name)) continue;
            const std::string path = "techs." + name;
            if (!obj.is_object()) throw Error(ErrorCode::ParseError, "expected an object", path);
            FieldReader reader(obj, path, notes, cat.provenance, origin);
            cat.techs[name] = std::make_shared<const IntegrationTech>(parse_tech(name, reader, obj, cat.nodes));
        }
    }
    return cat;
}

Catalog load_catalog_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open catalog '" + path.string() + "'", path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what(), path.string());
    }
    return load_catalog(doc, path.filename().string());
}

Catalog default_catalog() {
    static const Catalog cat = load_catalog(json::parse(kDefaultCatalogJson), "default_catalog.json");
    return cat;
}

json catalog_to_json(const Catalog& catalog) {
    json doc;
    json& nodes = doc["nodes"] = json::object();
    for (const auto& [name, n] : catalog.nodes) {
        nodes[name] = {{"defect_density_per_mm2", n->defect_density},
                       {"cluster_param", n->cluster_param},
                       {"wafer_cost", n->wafer_cost},
                       {"wafer_diameter_mm", n->wafer_diameter},
                       {"edge_exclusion_mm", n->edge_exclusion},
                       {"die_test_cost", n->die_test_cost},
                       {"nre_module_per_mm2", n->nre_module_factor},
                       {"nre_chip_per_mm2", n->nre_chip_factor},
                       {"nre_chip_fixed", n->fixed_chip_nre},
                       {"nre_d2d", n->d2d_nre_cost}};
    }
    json& techs = doc["techs"] = json::object();
    for (const auto& [name, t] : catalog.techs) {
        json entry = {{"kind", to_string(t->kind)},
                      {"substrate_cost_per_mm2", t->substrate_cost_per_area},
                      {"substrate_growth_factor", t->substrate_growth_factor},
                      {"substrate_yield", t->substrate_yield},
                      {"chip_bond_yield", t->chip_bond_yield},
                      {"bond_cost_per_chip", t->bond_cost_per_chip},
                      {"interposer_cost_scale", t->interposer_cost_scale},
                      {"interposer_area_factor", t->interposer_area_factor},
                      {"package_nre_per_mm2", t->package_nre_factor},
                      {"package_nre_fixed", t->package_fixed_nre}};
        if (t->interposer_node) entry["interposer_node"] = t->interposer_node->name;
        techs[name] = std::move(entry);
    }
    return doc;
}

Catalog apply_overrides(const Catalog& base, const json& overrides, const std::string& origin) {
    if (!overrides.is_object()) throw Error(ErrorCode::ParseError, "catalog overrides must be an object", "catalog");
    check_keys(overrides, {"nodes", "techs", "provenance"}, "catalog");

    json merged = catalog_to_json(base);
    std::set<std::string> overridden;
    for (const char* section : {"nodes", "techs"}) {
        if (!overrides.contains(section)) continue;
        const json& entries = overrides[section];
        if (!entries.is_object()) {
            throw Error(ErrorCode::ParseError, "expected an object", std::string("catalog.") + section);
        }
        for (const auto& [name, fields] : entries.items()) {
            if (is_annotation(name)) continue;
            const std::string path = std::string(section) + "." + name;
            if (!fields.is_object()) throw Error(ErrorCode::ParseError, "expected an object", "catalog." + path);
            json& target = merged[section][name];
            if (target.is_null()) target = json::object();
            if (fields.contains("defect_density_per_cm2") || fields.contains("defect_density_per_mm2")) {
                target.erase("defect_density_per_cm2");
                target.erase("defect_density_per_mm2");
            }
            for (const auto& [key, value] : fields.items()) {
                if (is_annotation(key)) continue;
                target[key] = value;
                overridden.insert(path + "." + (key.starts_with("defect_density") ? "defect_density" : key));
            }
        }
    }

    Catalog result = load_catalog(merged, origin);
    std::map<std::string, ProvenanceEntry> prior;
    for (const auto& e : base.provenance) prior[e.key] = e;
    for (auto& e : result.provenance) {
        if (overridden.contains(e.key)) {
            e.source = "override";
            e.note = origin;
        } else if (auto it = prior.find(e.key); it != prior.end()) {
            e = it->second;
        }
    }
    return result;
}

Catalog scale_costs(const Catalog& catalog, double factor) {
    Catalog out;
    out.provenance = catalog.provenance;
    for (const auto& [name, n] : catalog.nodes) {
        ProcessNode s = *n;
        s.wafer_cost *= factor;
        s.die_test_cost *= factor;
        s.nre_module_factor *= factor;
        s.nre_chip_factor *= factor;
        s.fixed_chip_nre *= factor;
        s.d2d_nre_cost *= factor;
        out.nodes[name] = std::make_shared<const ProcessNode>(std::move(s));
    }
    for (const auto& [name, t] : catalog.techs) {
        IntegrationTech s = *t;
        s.substrate_cost_per_area *= factor;
        s.bond_cost_per_chip *= factor;
        s.package_nre_factor *= factor;
        s.package_fixed_nre *= factor;
        if (s.interposer_node) s.interposer_node = out.nodes.at(s.interposer_node->name);
        out.techs[name] = std::make_shared<const IntegrationTech>(std::move(s));
    }
    return out;
}

json provenance_to_json(const std::vector<ProvenanceEntry>& ledger) {
    json out = json::array();
    for (const auto& e : ledger) out.push_back({{"key", e.key}, {"source", e.source}, {"note", e.note}});
    return out;
}

}  // namespace chipcost
