#pragma once

// Domain types of the cost model: process nodes, modules, chiplets,
// integration technologies and the systems assembled from them.
//
// A module is an indivisible group of functional units designed at one node.
// A chiplet groups modules of a single node and, in multi-chip systems,
// carries a D2D interface that occupies a fixed fraction of its die area.
// A system packages one or more chiplets (with multiplicity) under one
// integration technology. All objects are immutable once built and are
// shared by reference between systems and scenarios.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace chipcost {

/// Square millimetres per square centimetre; catalog defect densities are
/// quoted per cm² and stored per mm².
inline constexpr double kMm2PerCm2 = 100.0;

struct ProcessNode {
    std::string name;
    double defect_density = 0.0;   ///< defects per mm²
    double cluster_param = 3.0;    ///< negative-binomial clustering exponent
    double wafer_cost = 0.0;
    double wafer_diameter = 300.0; ///< mm
    double edge_exclusion = 3.0;   ///< mm
    double die_test_cost = 0.0;    ///< per-die adder for sort, bumping and test
    double nre_module_factor = 0.0;  ///< K_m, per mm² of module
    double nre_chip_factor = 0.0;    ///< K_c, per mm² of chip
    double fixed_chip_nre = 0.0;     ///< C, masks and IP per chip
    double d2d_nre_cost = 0.0;       ///< one-off D2D interface design at this node

    /// Radius of the usable wafer disc.
    double usable_radius() const { return wafer_diameter / 2.0 - edge_exclusion; }

    void validate() const;
    bool operator==(const ProcessNode&) const = default;
};

using NodeRef = std::shared_ptr<const ProcessNode>;

struct ModuleSpec {
    std::string name;
    double area = 0.0;
    NodeRef node;

    void validate() const;
};

bool same_definition(const ModuleSpec& a, const ModuleSpec& b);

class ChipletSpec {
public:
    ChipletSpec(std::string name, std::vector<ModuleSpec> modules, double d2d_area_fraction);

    const std::string& name() const { return name_; }
    const std::vector<ModuleSpec>& modules() const { return modules_; }
    double d2d_area_fraction() const { return d2d_area_fraction_; }
    const NodeRef& node() const { return modules_.front().node; }

    double module_area() const { return module_area_; }
    /// Die area including the D2D interface.
    double total_area() const { return module_area_ / (1.0 - d2d_area_fraction_); }
    double d2d_area() const { return total_area() * d2d_area_fraction_; }
    bool has_d2d() const { return d2d_area_fraction_ > 0.0; }

private:
    std::string name_;
    std::vector<ModuleSpec> modules_;
    double d2d_area_fraction_;
    double module_area_ = 0.0;
};

using ChipletRef = std::shared_ptr<const ChipletSpec>;

bool same_definition(const ChipletSpec& a, const ChipletSpec& b);

ChipletRef make_chiplet(std::string name, std::vector<ModuleSpec> modules,
                        double d2d_area_fraction = 0.0);

enum class TechKind { Monolithic, MCM, InfoChipFirst, InfoChipLast, Interposer2p5D };

const char* to_string(TechKind kind);
std::optional<TechKind> parse_tech_kind(const std::string& text);

struct IntegrationTech {
    std::string name;
    TechKind kind = TechKind::Monolithic;
    double substrate_cost_per_area = 0.0;
    double substrate_growth_factor = 1.0;  ///< extra routing layers (MCM)
    double substrate_yield = 1.0;          ///< y3
    double chip_bond_yield = 1.0;          ///< y2, per chip
    double bond_cost_per_chip = 0.0;
    NodeRef interposer_node;               ///< InFO and 2.5D only
    double interposer_cost_scale = 1.0;    ///< RDL vs silicon per-area cost
    double interposer_area_factor = 1.0;   ///< package area / Σ chip areas
    double package_nre_factor = 0.0;       ///< K_p
    double package_fixed_nre = 0.0;        ///< C_p

    bool has_interposer() const {
        return kind == TechKind::InfoChipFirst || kind == TechKind::InfoChipLast ||
               kind == TechKind::Interposer2p5D;
    }
    bool is_info() const {
        return kind == TechKind::InfoChipFirst || kind == TechKind::InfoChipLast;
    }

    void validate() const;
};

using TechRef = std::shared_ptr<const IntegrationTech>;

bool same_definition(const IntegrationTech& a, const IntegrationTech& b);

struct ChipletUse {
    ChipletRef chiplet;
    int count = 1;
};

struct SystemSpec {
    std::string name;
    std::vector<ChipletUse> chiplets;
    TechRef tech;
    double package_area = 0.0;
    std::int64_t quantity = 1;
    /// Systems sharing a package id share one package design (package reuse).
    std::string package_id;

    int chip_count() const;
    double chip_area_sum() const;
};

/// Validates and assembles a system. The package area defaults to
/// interposer_area_factor × Σ chip areas when not given.
SystemSpec build_system(std::string name, std::vector<ChipletUse> chiplets, TechRef tech,
                        std::int64_t quantity,
                        std::optional<double> package_area = std::nullopt,
                        std::string package_id = {});

/// Itemized per-unit cost: five RE parts plus four amortized NRE parts.
struct CostBreakdown {
    double raw_chips = 0.0;
    double chip_defects = 0.0;
    double raw_package = 0.0;
    double package_defects = 0.0;
    double wasted_kgd = 0.0;
    double nre_modules = 0.0;
    double nre_chips = 0.0;
    double nre_packages = 0.0;
    double nre_d2d = 0.0;

    double chips() const { return raw_chips + chip_defects; }
    double packaging() const { return raw_package + package_defects + wasted_kgd; }
    double re_total() const { return chips() + packaging(); }
    double nre_total() const { return nre_modules + nre_chips + nre_packages + nre_d2d; }
    double total() const { return re_total() + nre_total(); }

    CostBreakdown scaled(double factor) const;
};

}  // namespace chipcost
