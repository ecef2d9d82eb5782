#include "chipcost/core.hpp"

#include <algorithm>
#include <cmath>

#include "chipcost/error.hpp"

namespace chipcost {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptySystem: return "EmptySystem";
        case ErrorCode::MonolithicWithD2D: return "MonolithicWithD2D";
        case ErrorCode::NodeMismatchWithinChiplet: return "NodeMismatchWithinChiplet";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownNodeReference: return "UnknownNodeReference";
        case ErrorCode::UnknownReference: return "UnknownReference";
        case ErrorCode::ConflictingDefinition: return "ConflictingDefinition";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::NegativeArea: return "NegativeArea";
        case ErrorCode::DieLargerThanWafer: return "DieLargerThanWafer";
        case ErrorCode::OutOfRangeYield: return "OutOfRangeYield";
        case ErrorCode::ZeroYield: return "ZeroYield";
        case ErrorCode::FlowNotSupported: return "FlowNotSupported";
        case ErrorCode::NonMonolithicInSoCGroup: return "NonMonolithicInSoCGroup";
        case ErrorCode::ZeroQuantity: return "ZeroQuantity";
        case ErrorCode::EmptyCounts: return "EmptyCounts";
        case ErrorCode::FootprintMismatch: return "FootprintMismatch";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

namespace {

void require(bool ok, const std::string& what, const std::string& path = {}) {
    if (!ok) throw Error(ErrorCode::InvariantViolation, what, path);
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

bool is_fraction(double v) { return std::isfinite(v) && v > 0.0 && v <= 1.0; }

}  // namespace

void ProcessNode::validate() const {
    const std::string at = "nodes." + name;
    require(!name.empty(), "process node without a name", "nodes");
    require(finite_nonneg(defect_density), "defect density must be >= 0", at + ".defect_density");
    require(std::isfinite(cluster_param) && cluster_param > 0.0, "cluster parameter must be > 0",
            at + ".cluster_param");
    require(std::isfinite(wafer_diameter) && std::isfinite(edge_exclusion) && edge_exclusion >= 0.0 &&
                wafer_diameter > 2.0 * edge_exclusion,
            "wafer diameter must exceed twice the edge exclusion", at + ".wafer_diameter_mm");
    require(finite_nonneg(wafer_cost), "wafer cost must be >= 0", at + ".wafer_cost");
    require(finite_nonneg(die_test_cost), "die test cost must be >= 0", at + ".die_test_cost");
    require(finite_nonneg(nre_module_factor), "module NRE factor must be >= 0", at + ".nre_module_per_mm2");
    require(finite_nonneg(nre_chip_factor), "chip NRE factor must be >= 0", at + ".nre_chip_per_mm2");
    require(finite_nonneg(fixed_chip_nre), "fixed chip NRE must be >= 0", at + ".nre_chip_fixed");
    require(finite_nonneg(d2d_nre_cost), "D2D NRE must be >= 0", at + ".nre_d2d");
}

void ModuleSpec::validate() const {
    if (!(std::isfinite(area) && area > 0.0)) {
        throw Error(ErrorCode::InvariantViolation, "module '" + name + "' must have area > 0",
                    "modules." + name + ".area");
    }
    if (!node) {
        throw Error(ErrorCode::UnknownNodeReference, "module '" + name + "' has no process node",
                    "modules." + name + ".node");
    }
}

bool same_definition(const ModuleSpec& a, const ModuleSpec& b) {
    return a.name == b.name && a.area == b.area && a.node && b.node && *a.node == *b.node;
}

ChipletSpec::ChipletSpec(std::string name, std::vector<ModuleSpec> modules, double d2d_area_fraction)
    : name_(std::move(name)), modules_(std::move(modules)), d2d_area_fraction_(d2d_area_fraction) {
    const std::string at = "chiplets." + name_;
    if (modules_.empty()) {
        throw Error(ErrorCode::InvariantViolation, "chiplet '" + name_ + "' has no modules", at + ".modules");
    }
    if (!(std::isfinite(d2d_area_fraction_) && d2d_area_fraction_ >= 0.0 && d2d_area_fraction_ < 1.0)) {
        throw Error(ErrorCode::InvariantViolation, "D2D area fraction must lie in [0, 1)",
                    at + ".d2d_area_fraction");
    }
    for (const auto& m : modules_) {
        m.validate();
        if (!(*m.node == *modules_.front().node)) {
            throw Error(ErrorCode::NodeMismatchWithinChiplet,
                        "chiplet '" + name_ + "' mixes nodes '" + modules_.front().node->name + "' and '" +
                            m.node->name + "'",
                        at + ".modules");
        }
        module_area_ += m.area;
    }
}

bool same_definition(const ChipletSpec& a, const ChipletSpec& b) {
    if (a.name() != b.name() || a.d2d_area_fraction() != b.d2d_area_fraction() ||
        a.modules().size() != b.modules().size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.modules().size(); ++i) {
        if (!same_definition(a.modules()[i], b.modules()[i])) return false;
    }
    return true;
}

ChipletRef make_chiplet(std::string name, std::vector<ModuleSpec> modules, double d2d_area_fraction) {
    return std::make_shared<const ChipletSpec>(std::move(name), std::move(modules), d2d_area_fraction);
}

const char* to_string(TechKind kind) {
    switch (kind) {
        case TechKind::Monolithic: return "monolithic";
        case TechKind::MCM: return "mcm";
        case TechKind::InfoChipFirst: return "info-chip-first";
        case TechKind::InfoChipLast: return "info-chip-last";
        case TechKind::Interposer2p5D: return "2.5d";
    }
    return "unknown";
}

std::optional<TechKind> parse_tech_kind(const std::string& text) {
    for (auto kind : {TechKind::Monolithic, TechKind::MCM, TechKind::InfoChipFirst, TechKind::InfoChipLast,
                      TechKind::Interposer2p5D}) {
        if (text == to_string(kind)) return kind;
    }
    return std::nullopt;
}

void IntegrationTech::validate() const {
    const std::string at = "techs." + name;
    require(!name.empty(), "integration technology without a name", "techs");
    require(finite_nonneg(substrate_cost_per_area), "substrate cost must be >= 0", at + ".substrate_cost_per_mm2");
    require(std::isfinite(substrate_growth_factor) && substrate_growth_factor >= 1.0,
            "substrate growth factor must be >= 1", at + ".substrate_growth_factor");
    require(std::isfinite(interposer_area_factor) && interposer_area_factor >= 1.0,
            "interposer area factor must be >= 1", at + ".interposer_area_factor");
    require(is_fraction(substrate_yield), "substrate yield must lie in (0, 1]", at + ".substrate_yield");
    require(is_fraction(chip_bond_yield), "chip bond yield must lie in (0, 1]", at + ".chip_bond_yield");
    require(finite_nonneg(bond_cost_per_chip), "bond cost must be >= 0", at + ".bond_cost_per_chip");
    require(finite_nonneg(interposer_cost_scale), "interposer cost scale must be >= 0",
            at + ".interposer_cost_scale");
    require(finite_nonneg(package_nre_factor), "package NRE factor must be >= 0", at + ".package_nre_per_mm2");
    require(finite_nonneg(package_fixed_nre), "package fixed NRE must be >= 0", at + ".package_nre_fixed");
    if (has_interposer() && !interposer_node) {
        throw Error(ErrorCode::UnknownNodeReference,
                    "technology '" + name + "' needs an interposer node", at + ".interposer_node");
    }
}

bool same_definition(const IntegrationTech& a, const IntegrationTech& b) {
    const bool nodes_match = (!a.interposer_node && !b.interposer_node) ||
                             (a.interposer_node && b.interposer_node && *a.interposer_node == *b.interposer_node);
    return nodes_match && a.name == b.name && a.kind == b.kind &&
           a.substrate_cost_per_area == b.substrate_cost_per_area &&
           a.substrate_growth_factor == b.substrate_growth_factor && a.substrate_yield == b.substrate_yield &&
           a.chip_bond_yield == b.chip_bond_yield && a.bond_cost_per_chip == b.bond_cost_per_chip &&
           a.interposer_cost_scale == b.interposer_cost_scale &&
           a.interposer_area_factor == b.interposer_area_factor &&
           a.package_nre_factor == b.package_nre_factor && a.package_fixed_nre == b.package_fixed_nre;
}

int SystemSpec::chip_count() const {
    int n = 0;
    for (const auto& use : chiplets) n += use.count;
    return n;
}

double SystemSpec::chip_area_sum() const {
    double s = 0.0;
    for (const auto& use : chiplets) s += use.count * use.chiplet->total_area();
    return s;
}

SystemSpec build_system(std::string name, std::vector<ChipletUse> chiplets, TechRef tech, std::int64_t quantity,
                        std::optional<double> package_area, std::string package_id) {
    const std::string at = "systems." + name;
    if (chiplets.empty()) {
        throw Error(ErrorCode::EmptySystem, "system '" + name + "' has no chiplets", at + ".chiplets");
    }
    if (!tech) {
        throw Error(ErrorCode::UnknownReference, "system '" + name + "' has no integration technology", at + ".tech");
    }
    for (const auto& use : chiplets) {
        if (!use.chiplet) {
            throw Error(ErrorCode::UnknownReference, "system '" + name + "' references a null chiplet",
                        at + ".chiplets");
        }
        if (use.count < 1) {
            throw Error(ErrorCode::InvariantViolation, "chiplet count must be >= 1", at + ".chiplets.count");
        }
    }
    if (quantity < 1) {
        throw Error(ErrorCode::ZeroQuantity, "system '" + name + "' must have quantity >= 1", at + ".quantity");
    }

    SystemSpec sys;
    sys.name = std::move(name);
    sys.chiplets = std::move(chiplets);
    sys.tech = std::move(tech);
    sys.quantity = quantity;

    if (sys.tech->kind == TechKind::Monolithic) {
        if (sys.chip_count() != 1) {
            throw Error(ErrorCode::MonolithicWithD2D, "a monolithic system holds exactly one chip", at + ".chiplets");
        }
        if (sys.chiplets.front().chiplet->has_d2d()) {
            throw Error(ErrorCode::MonolithicWithD2D, "a monolithic chip carries no D2D interface",
                        at + ".chiplets");
        }
    }

    const double footprint = sys.tech->interposer_area_factor * sys.chip_area_sum();
    if (package_area) {
        if (!(std::isfinite(*package_area) && *package_area > 0.0)) {
            throw Error(ErrorCode::InvariantViolation, "package area must be > 0", at + ".package_area");
        }
        sys.package_area = *package_area;
    } else {
        sys.package_area = footprint;
    }
    sys.package_id = package_id.empty() ? sys.name : std::move(package_id);
    return sys;
}

CostBreakdown CostBreakdown::scaled(double f) const {
    return {raw_chips * f,   chip_defects * f, raw_package * f, package_defects * f, wasted_kgd * f,
            nre_modules * f, nre_chips * f,    nre_packages * f, nre_d2d * f};
}

}  // namespace chipcost
