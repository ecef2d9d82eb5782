#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "chipcost/core.hpp"

namespace chipcost {

enum class NreCategory { Module, Chip, Package, D2D };

const char* to_string(NreCategory category);

/// One consumer of a ledger item: `instances` copies per unit of `system`.
struct NreUse {
    std::string system;
    double instances = 0.0;
};

/// One-time design costs of a group of systems. Every distinct module, chip,
/// package and D2D node appears once however many systems use it; `uses`
/// records who consumes each item so it can be amortized.
struct NreLedger {
    std::map<std::string, double> module_nre;
    std::map<std::string, double> chip_nre;
    std::map<std::string, double> package_nre;
    std::map<std::string, double> d2d_nre;
    std::map<NreCategory, std::map<std::string, std::vector<NreUse>>> uses;

    double module_total() const;
    double chip_total() const;
    double package_total() const;
    double d2d_total() const;
    double total() const;
};

/// K_c·S_c + Σ K_m·S_m + C for one chip; S_c includes the D2D area, the module
/// sum does not (D2D design is a separate per-node item).
double chip_nre(const ChipletSpec& chiplet);

double package_nre(const SystemSpec& system);

/// Module-reuse group: modules once per group, chip and package per system.
NreLedger group_nre_soc(std::span<const SystemSpec> systems);

/// Chiplet-reuse group: modules and chiplets once per group, packages once
/// per package id, D2D interface once per node.
NreLedger group_nre_multichip(std::span<const SystemSpec> systems);

/// Uses group_nre_soc for all-monolithic groups, group_nre_multichip otherwise.
NreLedger group_nre(std::span<const SystemSpec> systems);

struct NreShare {
    std::string system;
    double nre_modules = 0.0;
    double nre_chips = 0.0;
    double nre_packages = 0.0;
    double nre_d2d = 0.0;

    double total() const { return nre_modules + nre_chips + nre_packages + nre_d2d; }
};

/// Per-unit NRE of each system. A shared item is split over all instances
/// consumed by all systems (units × multiplicity), so Σ share·quantity equals
/// the ledger total.
std::vector<NreShare> amortize(const NreLedger& ledger, std::span<const SystemSpec> systems);

nlohmann::json ledger_to_json(const NreLedger& ledger);

}  // namespace chipcost
