#include "chipcost/re_cost.hpp"

#include <cmath>

#include "chipcost/error.hpp"

namespace chipcost {

DieCost chip_re_cost(const ChipletSpec& chiplet) { return die_cost(chiplet.total_area(), *chiplet.node()); }

PackagingYields packaging_yields(const SystemSpec& system) {
    const IntegrationTech& tech = *system.tech;
    PackagingYields y;
    y.n = system.chip_count();
    y.y2 = tech.chip_bond_yield;
    y.y3 = tech.substrate_yield;
    if (tech.has_interposer()) y.y1 = die_yield(system.package_area, *tech.interposer_node);
    return y;
}

namespace {

void check_yields(const PackagingYields& y, const std::string& system) {
    for (double v : {y.y1, y.y2, y.y3}) {
        if (!(v > 0.0)) {
            throw Error(ErrorCode::ZeroYield, "system '" + system + "' has a zero packaging yield",
                        "systems." + system + ".tech");
        }
    }
}

double kgd_cost(const SystemSpec& system) {
    double kgd = 0.0;
    for (const auto& use : system.chiplets) kgd += use.count * chip_re_cost(*use.chiplet).good();
    return kgd;
}

}  // namespace

PackagingCost packaging_cost(const SystemSpec& system) {
    const IntegrationTech& tech = *system.tech;
    const PackagingYields y = packaging_yields(system);
    check_yields(y, system.name);

    PackagingCost p;
    p.substrate = tech.substrate_cost_per_area * system.package_area;
    if (tech.kind == TechKind::MCM) p.substrate *= tech.substrate_growth_factor;
    if (tech.has_interposer()) {
        p.interposer = die_cost(system.package_area, *tech.interposer_node).raw * tech.interposer_cost_scale;
    }
    p.bonding = y.n * tech.bond_cost_per_chip;
    p.raw_package = p.substrate + p.interposer + p.bonding;

    const double bond_n = std::pow(y.y2, y.n);
    p.package_defects = p.interposer * (1.0 / (y.y1 * bond_n * y.y3) - 1.0) + p.substrate * (1.0 / y.y3 - 1.0);

    const double kgd_survival = tech.kind == TechKind::InfoChipFirst ? y.y1 * bond_n * y.y3 : bond_n * y.y3;
    p.wasted_kgd = kgd_cost(system) * (1.0 / kgd_survival - 1.0);
    return p;
}

double assembly_cost(const SystemSpec& system, AssemblyFlow flow, ChipLastConvention convention) {
    const IntegrationTech& tech = *system.tech;
    if (flow == AssemblyFlow::ChipFirst && !tech.is_info()) {
        throw Error(ErrorCode::FlowNotSupported,
                    "chip-first assembly applies to InFO only; '" + tech.name + "' is evaluated chip-last",
                    "systems." + system.name + ".tech");
    }
    const PackagingYields y = packaging_yields(system);
    check_yields(y, system.name);
    const PackagingCost p = packaging_cost(system);

    const double package = p.substrate + p.interposer;
    const double y_package = y.y1 * y.y3;
    const double chips = kgd_cost(system);

    if (flow == AssemblyFlow::ChipFirst) return (chips + package) / y_package;

    const double bonding_n = std::pow(y.y2, y.n);
    const double bonded = chips + y.n * tech.bond_cost_per_chip;
    if (convention == ChipLastConvention::PackageOutsideBonding) {
        return package / y_package + bonded / bonding_n;
    }
    return (package / y_package + bonded) / bonding_n;
}

CostBreakdown system_re_cost(const SystemSpec& system) {
    CostBreakdown b;
    for (const auto& use : system.chiplets) {
        const DieCost die = chip_re_cost(*use.chiplet);
        b.raw_chips += use.count * die.raw;
        b.chip_defects += use.count * die.defect;
    }
    const PackagingCost p = packaging_cost(system);
    b.raw_package = p.raw_package;
    b.package_defects = p.package_defects;
    b.wasted_kgd = p.wasted_kgd;
    return b;
}

double d2d_die_cost(const SystemSpec& system) {
    double cost = 0.0;
    for (const auto& use : system.chiplets) {
        cost += use.count * chip_re_cost(*use.chiplet).good() * use.chiplet->d2d_area_fraction();
    }
    return cost;
}

}  // namespace chipcost
