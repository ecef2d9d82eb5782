#include "chipcost/nre_cost.hpp"

#include <numeric>
#include <set>

#include "chipcost/error.hpp"

namespace chipcost {

const char* to_string(NreCategory category) {
    switch (category) {
        case NreCategory::Module: return "modules";
        case NreCategory::Chip: return "chips";
        case NreCategory::Package: return "packages";
        case NreCategory::D2D: return "d2d";
    }
    return "unknown";
}

namespace {

double sum_values(const std::map<std::string, double>& m) {
    return std::accumulate(m.begin(), m.end(), 0.0, [](double acc, const auto& kv) { return acc + kv.second; });
}

void add_use(NreLedger& ledger, NreCategory category, const std::string& key, const std::string& system,
             double instances) {
    auto& list = ledger.uses[category][key];
    for (auto& use : list) {
        if (use.system == system) {
            use.instances += instances;
            return;
        }
    }
    list.push_back({system, instances});
}

void check_unique_names(std::span<const SystemSpec> systems) {
    std::set<std::string> names;
    for (const auto& s : systems) {
        if (!names.insert(s.name).second) {
            throw Error(ErrorCode::InvalidArgument, "duplicate system name '" + s.name + "' in group",
                        "systems." + s.name);
        }
    }
}

// Records every module of every chiplet once; a module name bound to two
// different definitions is rejected.
void add_modules(NreLedger& ledger, std::map<std::string, ModuleSpec>& seen, const SystemSpec& sys) {
    for (const auto& use : sys.chiplets) {
        for (const auto& m : use.chiplet->modules()) {
            auto [it, inserted] = seen.emplace(m.name, m);
            if (!inserted && !same_definition(it->second, m)) {
                throw Error(ErrorCode::ConflictingDefinition,
                            "module '" + m.name + "' has two different definitions in one group",
                            "modules." + m.name);
            }
            ledger.module_nre[m.name] = m.node->nre_module_factor * m.area;
            add_use(ledger, NreCategory::Module, m.name, sys.name, use.count);
        }
    }
}

void add_package(NreLedger& ledger, std::map<std::string, const SystemSpec*>& seen, const SystemSpec& sys) {
    auto [it, inserted] = seen.emplace(sys.package_id, &sys);
    if (!inserted) {
        const SystemSpec& first = *it->second;
        if (first.package_area != sys.package_area || !same_definition(*first.tech, *sys.tech)) {
            throw Error(ErrorCode::ConflictingDefinition,
                        "package '" + sys.package_id + "' is shared by systems with different packages",
                        "systems." + sys.name + ".package");
        }
    }
    ledger.package_nre[sys.package_id] = package_nre(sys);
    add_use(ledger, NreCategory::Package, sys.package_id, sys.name, 1.0);
}

double chip_area_nre(const ChipletSpec& c) {
    return c.node()->nre_chip_factor * c.total_area() + c.node()->fixed_chip_nre;
}

}  // namespace

double NreLedger::module_total() const { return sum_values(module_nre); }
double NreLedger::chip_total() const { return sum_values(chip_nre); }
double NreLedger::package_total() const { return sum_values(package_nre); }
double NreLedger::d2d_total() const { return sum_values(d2d_nre); }
double NreLedger::total() const { return module_total() + chip_total() + package_total() + d2d_total(); }

double chip_nre(const ChipletSpec& chiplet) {
    double modules = 0.0;
    for (const auto& m : chiplet.modules()) modules += m.node->nre_module_factor * m.area;
    return chip_area_nre(chiplet) + modules;
}

double package_nre(const SystemSpec& system) {
    return system.tech->package_nre_factor * system.package_area + system.tech->package_fixed_nre;
}

NreLedger group_nre_soc(std::span<const SystemSpec> systems) {
    check_unique_names(systems);
    NreLedger ledger;
    std::map<std::string, ModuleSpec> modules;
    std::map<std::string, const SystemSpec*> packages;
    for (const auto& sys : systems) {
        if (sys.tech->kind != TechKind::Monolithic) {
            throw Error(ErrorCode::NonMonolithicInSoCGroup,
                        "system '" + sys.name + "' is not monolithic and cannot join an SoC group",
                        "systems." + sys.name + ".tech");
        }
        add_modules(ledger, modules, sys);
        // Every SoC die is its own design, even when two systems share modules.
        ledger.chip_nre[sys.name] = chip_area_nre(*sys.chiplets.front().chiplet);
        add_use(ledger, NreCategory::Chip, sys.name, sys.name, 1.0);
        add_package(ledger, packages, sys);
    }
    return ledger;
}

NreLedger group_nre_multichip(std::span<const SystemSpec> systems) {
    check_unique_names(systems);
    NreLedger ledger;
    std::map<std::string, ModuleSpec> modules;
    std::map<std::string, ChipletRef> chiplets;
    std::map<std::string, const SystemSpec*> packages;
    for (const auto& sys : systems) {
        add_modules(ledger, modules, sys);
        for (const auto& use : sys.chiplets) {
            const ChipletSpec& c = *use.chiplet;
            auto [it, inserted] = chiplets.emplace(c.name(), use.chiplet);
            if (!inserted && !same_definition(*it->second, c)) {
                throw Error(ErrorCode::ConflictingDefinition,
                            "chiplet '" + c.name() + "' has two different definitions in one group",
                            "chiplets." + c.name());
            }
            ledger.chip_nre[c.name()] = chip_area_nre(c);
            add_use(ledger, NreCategory::Chip, c.name(), sys.name, use.count);
            if (c.has_d2d()) {
                ledger.d2d_nre[c.node()->name] = c.node()->d2d_nre_cost;
                add_use(ledger, NreCategory::D2D, c.node()->name, sys.name, use.count);
            }
        }
        add_package(ledger, packages, sys);
    }
    return ledger;
}

NreLedger group_nre(std::span<const SystemSpec> systems) {
    for (const auto& s : systems) {
        if (s.tech->kind != TechKind::Monolithic) return group_nre_multichip(systems);
    }
    return group_nre_soc(systems);
}

std::vector<NreShare> amortize(const NreLedger& ledger, std::span<const SystemSpec> systems) {
    std::map<std::string, double> quantity;
    for (const auto& s : systems) {
        if (s.quantity < 1) {
            throw Error(ErrorCode::ZeroQuantity, "system '" + s.name + "' must have quantity >= 1",
                        "systems." + s.name + ".quantity");
        }
        quantity[s.name] = static_cast<double>(s.quantity);
    }

    std::map<std::string, NreShare> shares;
    for (const auto& s : systems) shares[s.name].system = s.name;

    const std::pair<NreCategory, const std::map<std::string, double>*> categories[] = {
        {NreCategory::Module, &ledger.module_nre},
        {NreCategory::Chip, &ledger.chip_nre},
        {NreCategory::Package, &ledger.package_nre},
        {NreCategory::D2D, &ledger.d2d_nre},
    };
    for (const auto& [category, costs] : categories) {
        auto cat_uses = ledger.uses.find(category);
        for (const auto& [key, cost] : *costs) {
            if (cat_uses == ledger.uses.end() || !cat_uses->second.contains(key)) continue;
            const auto& uses = cat_uses->second.at(key);
            double consumed = 0.0;
            for (const auto& u : uses) {
                auto q = quantity.find(u.system);
                if (q == quantity.end()) {
                    throw Error(ErrorCode::UnknownReference,
                                "ledger item '" + key + "' is used by unknown system '" + u.system + "'");
                }
                consumed += u.instances * q->second;
            }
            for (const auto& u : uses) {
                const double per_unit = cost * u.instances / consumed;
                NreShare& share = shares[u.system];
                switch (category) {
                    case NreCategory::Module: share.nre_modules += per_unit; break;
                    case NreCategory::Chip: share.nre_chips += per_unit; break;
                    case NreCategory::Package: share.nre_packages += per_unit; break;
                    case NreCategory::D2D: share.nre_d2d += per_unit; break;
                }
            }
        }
    }

    std::vector<NreShare> out;
    out.reserve(systems.size());
    for (const auto& s : systems) out.push_back(shares[s.name]);
    return out;
}

nlohmann::json ledger_to_json(const NreLedger& ledger) {
    nlohmann::json j;
    j["modules"] = ledger.module_nre;
    j["chips"] = ledger.chip_nre;
    j["packages"] = ledger.package_nre;
    j["d2d"] = ledger.d2d_nre;
    j["totals"] = {{"modules", ledger.module_total()},
                   {"chips", ledger.chip_total()},
                   {"packages", ledger.package_total()},
                   {"d2d", ledger.d2d_total()},
                   {"total", ledger.total()}};
    return j;
}

}  // namespace chipcost
