#include "chipcost/document.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>

#include "chipcost/error.hpp"

namespace chipcost {

using nlohmann::json;

namespace {

// Typed, path-aware access to one JSON object of the document.
class Reader {
public:
    Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw Error(ErrorCode::ParseError, "expected an object", path_);
    }

    void allow(std::initializer_list<const char*> keys) const {
        for (const auto& [key, value] : j_.items()) {
            if (key.starts_with("_")) continue;
            bool known = false;
            for (const char* k : keys) known = known || key == k;
            if (!known) throw Error(ErrorCode::ParseError, "unknown key '" + key + "'", sub(key));
        }
    }

    bool has(const std::string& key) const { return j_.contains(key); }
    std::string sub(const std::string& key) const { return path_ + "." + key; }
    const std::string& path() const { return path_; }

    const json& get(const std::string& key) const {
        if (!j_.contains(key)) throw Error(ErrorCode::ParseError, "missing required key '" + key + "'", sub(key));
        return j_.at(key);
    }

    double number(const std::string& key) const {
        const json& v = get(key);
        if (!v.is_number()) throw Error(ErrorCode::ParseError, "expected a number", sub(key));
        return v.get<double>();
    }

    double number_or(const std::string& key, double fallback) const { return has(key) ? number(key) : fallback; }

    std::int64_t integer(const std::string& key) const {
        const double v = number(key);
        if (std::floor(v) != v || std::abs(v) > 9.0e15) {
            throw Error(ErrorCode::ParseError, "expected an integer", sub(key));
        }
        return static_cast<std::int64_t>(v);
    }

    std::int64_t integer_or(const std::string& key, std::int64_t fallback) const {
        return has(key) ? integer(key) : fallback;
    }

    std::string text(const std::string& key) const {
        const json& v = get(key);
        if (!v.is_string()) throw Error(ErrorCode::ParseError, "expected a string", sub(key));
        return v.get<std::string>();
    }

    bool flag_or(const std::string& key, bool fallback) const {
        if (!has(key)) return fallback;
        const json& v = get(key);
        if (!v.is_boolean()) throw Error(ErrorCode::ParseError, "expected true or false", sub(key));
        return v.get<bool>();
    }

    const json& array(const std::string& key) const {
        const json& v = get(key);
        if (!v.is_array()) throw Error(ErrorCode::ParseError, "expected an array", sub(key));
        return v;
    }

    std::vector<std::string> strings(const std::string& key) const {
        std::vector<std::string> out;
        const json& a = array(key);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i].is_string()) {
                throw Error(ErrorCode::ParseError, "expected a string", sub(key) + "[" + std::to_string(i) + "]");
            }
            out.push_back(a[i].get<std::string>());
        }
        return out;
    }

    std::vector<int> integers(const std::string& key) const {
        std::vector<int> out;
        const json& a = array(key);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i].is_number_integer()) {
                throw Error(ErrorCode::ParseError, "expected an integer", sub(key) + "[" + std::to_string(i) + "]");
            }
            out.push_back(a[i].get<int>());
        }
        return out;
    }

private:
    const json& j_;
    std::string path_;
};

std::string indexed(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const ChipletRef& find_chiplet(const Document& doc, const std::string& name, const std::string& path) {
    auto it = doc.chiplets.find(name);
    if (it == doc.chiplets.end()) throw Error(ErrorCode::UnknownReference, "unknown chiplet '" + name + "'", path);
    return it->second;
}

std::vector<ChipletRef> find_chiplets(const Document& doc, const Reader& r, const std::string& key) {
    std::vector<ChipletRef> out;
    const auto names = r.strings(key);
    for (std::size_t i = 0; i < names.size(); ++i) {
        out.push_back(find_chiplet(doc, names[i], indexed(r.sub(key), i)));
    }
    return out;
}

void parse_modules(Document& d, const json& section) {
    Reader all(section, "modules");
    for (const auto& [name, body] : section.items()) {
        if (name.starts_with("_")) continue;
        Reader r(body, all.sub(name));
        r.allow({"area", "node"});
        ModuleSpec m{name, r.number("area"), d.catalog.node(r.text("node"), r.sub("node"))};
        if (!(m.area > 0.0)) throw Error(ErrorCode::InvariantViolation, "module area must be > 0", r.sub("area"));
        d.modules.emplace(name, std::move(m));
    }
}

void parse_chiplets(Document& d, const json& section) {
    Reader all(section, "chiplets");
    for (const auto& [name, body] : section.items()) {
        if (name.starts_with("_")) continue;
        Reader r(body, all.sub(name));
        r.allow({"modules", "d2d_area_fraction"});
        std::vector<ModuleSpec> modules;
        const auto names = r.strings("modules");
        for (std::size_t i = 0; i < names.size(); ++i) {
            auto it = d.modules.find(names[i]);
            if (it == d.modules.end()) {
                throw Error(ErrorCode::UnknownReference, "unknown module '" + names[i] + "'",
                            indexed(r.sub("modules"), i));
            }
            modules.push_back(it->second);
        }
        d.chiplets.emplace(name, make_chiplet(name, std::move(modules), r.number_or("d2d_area_fraction", 0.0)));
    }
}

void parse_systems(Document& d, const json& section) {
    if (!section.is_array()) throw Error(ErrorCode::ParseError, "expected an array", "systems");
    std::set<std::string> names;
    for (std::size_t i = 0; i < section.size(); ++i) {
        Reader r(section[i], indexed("systems", i));
        r.allow({"name", "tech", "chiplets", "quantity", "package_area", "package"});
        const std::string name = r.text("name");
        if (!names.insert(name).second) {
            throw Error(ErrorCode::ConflictingDefinition, "system '" + name + "' defined twice", r.sub("name"));
        }
        std::vector<ChipletUse> uses;
        const json& list = r.array("chiplets");
        for (std::size_t k = 0; k < list.size(); ++k) {
            Reader u(list[k], indexed(r.sub("chiplets"), k));
            u.allow({"chiplet", "count"});
            const std::int64_t count = u.integer_or("count", 1);
            if (count < 1 || count > 1'000'000) {
                throw Error(ErrorCode::InvariantViolation, "chiplet count must be >= 1", u.sub("count"));
            }
            uses.push_back({find_chiplet(d, u.text("chiplet"), u.sub("chiplet")), static_cast<int>(count)});
        }
        std::optional<double> area;
        if (r.has("package_area")) area = r.number("package_area");
        const TechRef& tech = d.catalog.tech(r.text("tech"), r.sub("tech"));
        try {
            d.systems.push_back(build_system(name, std::move(uses), tech, r.integer_or("quantity", 1), area,
                                             r.has("package") ? r.text("package") : std::string{}));
        } catch (const Error& e) {
            // Point at the document entry rather than the internal name.
            throw Error(e.code(), e.what(), r.path());
        }
    }
}

TechRef optional_tech(const Document& doc, const Reader& r, const std::string& key) {
    return r.has(key) ? doc.catalog.tech(r.text(key), r.sub(key)) : nullptr;
}

}  // namespace

const SystemSpec& Document::system(const std::string& name, const std::string& path) const {
    for (const auto& s : systems) {
        if (s.name == name) return s;
    }
    throw Error(ErrorCode::UnknownReference, "unknown system '" + name + "'", path);
}

Document load_document(const json& doc, const Catalog& base, const std::string& origin) {
    if (!doc.is_object() || doc.empty()) throw Error(ErrorCode::ParseError, "spec document is empty", "spec");
    Reader top(doc, "spec");
    top.allow({"catalog", "modules", "chiplets", "systems", "compare", "sweep", "reuse", "curves", "break_even"});

    Document d;
    d.source = doc;
    d.catalog = doc.contains("catalog") ? apply_overrides(base, doc["catalog"], origin) : base;
    if (doc.contains("modules")) parse_modules(d, doc["modules"]);
    if (doc.contains("chiplets")) parse_chiplets(d, doc["chiplets"]);
    if (doc.contains("systems")) parse_systems(d, doc["systems"]);
    return d;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'", path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what(), path);
    }
}

Document load_document_file(const std::string& path, const Catalog& base) {
    return load_document(read_json_file(path), base, path);
}

std::vector<ComparePair> parse_compare(const Document& doc) {
    std::vector<ComparePair> pairs;
    if (!doc.has_section("compare")) {
        throw Error(ErrorCode::ParseError, "the compare command needs a 'compare' section", "compare");
    }
    const json& list = doc.source["compare"];
    if (!list.is_array() || list.empty()) {
        throw Error(ErrorCode::ParseError, "expected a non-empty array", "compare");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
        Reader r(list[i], indexed("compare", i));
        r.allow({"soc", "multi"});
        ComparePair p{r.text("soc"), r.text("multi")};
        doc.system(p.soc, r.sub("soc"));
        doc.system(p.multi, r.sub("multi"));
        pairs.push_back(std::move(p));
    }
    return pairs;
}

SweepRequest parse_sweep(const Document& doc) {
    if (!doc.has_section("sweep")) {
        throw Error(ErrorCode::ParseError, "the sweep command needs a 'sweep' section", "sweep");
    }
    Reader r(doc.source["sweep"], "sweep");
    r.allow({"module_area", "node", "counts", "techs", "d2d_area_fraction"});
    SweepRequest s;
    s.module_area = r.number("module_area");
    if (!(s.module_area > 0.0)) throw Error(ErrorCode::InvariantViolation, "module area must be > 0", r.sub("module_area"));
    s.node = doc.catalog.node(r.text("node"), r.sub("node"));
    s.counts = r.integers("counts");
    if (s.counts.empty()) throw Error(ErrorCode::EmptyCounts, "sweep needs at least one chiplet count", r.sub("counts"));
    for (std::size_t i = 0; i < s.counts.size(); ++i) {
        if (s.counts[i] < 1) {
            throw Error(ErrorCode::InvariantViolation, "chiplet counts must be >= 1", indexed(r.sub("counts"), i));
        }
    }
    const auto names = r.strings("techs");
    for (std::size_t i = 0; i < names.size(); ++i) {
        s.techs.push_back(doc.catalog.tech(names[i], indexed(r.sub("techs"), i)));
    }
    s.d2d_area_fraction = r.number_or("d2d_area_fraction", 0.1);
    return s;
}

ReuseRequest parse_reuse(const Document& doc) {
    if (!doc.has_section("reuse")) {
        throw Error(ErrorCode::ParseError, "the reuse command needs a 'reuse' section", "reuse");
    }
    Reader r(doc.source["reuse"], "reuse");
    const std::string scheme = r.text("scheme");
    ReuseRequest req;
    if (scheme == "scms") {
        r.allow({"scheme", "chiplet", "counts", "tech", "quantity_each", "package_reuse", "soc_tech"});
        const auto counts = r.integers("counts");
        req.scenario = scms(find_chiplet(doc, r.text("chiplet"), r.sub("chiplet")), counts,
                            doc.catalog.tech(r.text("tech"), r.sub("tech")), r.integer("quantity_each"),
                            r.flag_or("package_reuse", false));
    } else if (scheme == "ocme") {
        r.allow({"scheme", "center", "extensions", "sockets", "tech", "quantity_each", "package_reuse",
                 "center_node", "soc_tech"});
        const auto extensions = find_chiplets(doc, r, "extensions");
        NodeRef override_node = r.has("center_node") ? doc.catalog.node(r.text("center_node"), r.sub("center_node"))
                                                     : nullptr;
        req.scenario = ocme(find_chiplet(doc, r.text("center"), r.sub("center")), extensions,
                            static_cast<int>(r.integer("sockets")), doc.catalog.tech(r.text("tech"), r.sub("tech")),
                            r.integer("quantity_each"), r.flag_or("package_reuse", false), override_node);
    } else if (scheme == "fsmc") {
        r.allow({"scheme", "chiplets", "sockets", "tech", "quantity_each", "soc_tech"});
        const auto chiplets = find_chiplets(doc, r, "chiplets");
        req.scenario = fsmc_enumerate(chiplets, static_cast<int>(r.integer("sockets")),
                                      doc.catalog.tech(r.text("tech"), r.sub("tech")), r.integer("quantity_each"));
    } else if (scheme == "group") {
        r.allow({"scheme", "systems", "soc_tech"});
        const auto names = r.strings("systems");
        req.scenario.name = "group";
        for (std::size_t i = 0; i < names.size(); ++i) {
            req.scenario.systems.push_back(doc.system(names[i], indexed(r.sub("systems"), i)));
        }
        if (req.scenario.systems.empty()) {
            throw Error(ErrorCode::EmptySystem, "reuse group lists no systems", r.sub("systems"));
        }
    } else {
        throw Error(ErrorCode::ParseError, "unknown scheme '" + scheme + "' (expected scms, ocme, fsmc or group)",
                    r.sub("scheme"));
    }
    req.soc_tech = optional_tech(doc, r, "soc_tech");
    return req;
}

CurvesRequest parse_curves(const Document& doc) {
    CurvesRequest c;
    if (!doc.has_section("curves")) {
        std::set<std::string> interposers;
        for (const auto& [name, t] : doc.catalog.techs) {
            if (t->interposer_node) interposers.insert(t->interposer_node->name);
        }
        for (const auto& [name, n] : doc.catalog.nodes) {
            if (!interposers.contains(name)) c.nodes.push_back(n);
        }
        return c;
    }
    Reader r(doc.source["curves"], "curves");
    r.allow({"nodes", "area_min", "area_max", "step"});
    if (r.has("nodes")) {
        const auto names = r.strings("nodes");
        for (std::size_t i = 0; i < names.size(); ++i) {
            c.nodes.push_back(doc.catalog.node(names[i], indexed(r.sub("nodes"), i)));
        }
    } else {
        for (const auto& [name, n] : doc.catalog.nodes) c.nodes.push_back(n);
    }
    c.area_min = r.number_or("area_min", c.area_min);
    c.area_max = r.number_or("area_max", c.area_max);
    c.step = r.number_or("step", c.step);
    return c;
}

BreakEvenRequest parse_break_even(const Document& doc) {
    if (!doc.has_section("break_even")) {
        throw Error(ErrorCode::ParseError, "the break-even command needs a 'break_even' section", "break_even");
    }
    Reader r(doc.source["break_even"], "break_even");
    r.allow({"soc", "multi", "min_quantity", "max_quantity"});
    BreakEvenRequest b;
    b.soc = r.text("soc");
    b.multi = r.text("multi");
    doc.system(b.soc, r.sub("soc"));
    doc.system(b.multi, r.sub("multi"));
    b.min_quantity = r.integer_or("min_quantity", b.min_quantity);
    b.max_quantity = r.integer_or("max_quantity", b.max_quantity);
    return b;
}

}  // namespace chipcost
