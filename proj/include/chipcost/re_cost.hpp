#pragma once

#include "chipcost/core.hpp"
#include "chipcost/yield.hpp"

namespace chipcost {

/// Good-die cost of one chiplet; the D2D area is part of the die.
DieCost chip_re_cost(const ChipletSpec& chiplet);

struct PackagingYields {
    double y1 = 1.0;  ///< interposer (or RDL) yield; 1 without an interposer
    double y2 = 1.0;  ///< per-chip bond yield
    double y3 = 1.0;  ///< substrate / interposer-attach yield
    int n = 1;        ///< chips bonded
};

PackagingYields packaging_yields(const SystemSpec& system);

struct PackagingCost {
    double substrate = 0.0;
    double interposer = 0.0;
    double bonding = 0.0;
    double raw_package = 0.0;      ///< substrate + interposer + bonding at unit yield
    double package_defects = 0.0;
    double wasted_kgd = 0.0;

    double total() const { return raw_package + package_defects + wasted_kgd; }
};

/// Packaging cost terms:
///   interposer · (1/(y1·y2ⁿ·y3) − 1) + substrate · (1/y3 − 1)   (package defects)
///   KGD · (1/(y2ⁿ·y3) − 1)                                      (wasted good dies)
/// Chip-first InFO exposes the KGDs to the RDL yield y1 as well.
PackagingCost packaging_cost(const SystemSpec& system);

enum class AssemblyFlow { ChipFirst, ChipLast };

/// How the chip-last expression groups the package term. AsPrinted divides
/// the whole numerator, package term included, by Y_bondingⁿ;
/// PackageOutsideBonding leaves C_package/Y_package outside that division.
enum class ChipLastConvention { AsPrinted, PackageOutsideBonding };

/// Unit assembly cost of the system under a packaging flow:
///   chip-first = (Σ C_chip/Y_chip + C_package) / Y_package
///   chip-last  = (C_package/Y_package + Σ (C_chip/Y_chip + C_bond)) / Y_bondingⁿ
/// with Y_package = y1·y3 and Y_bonding = y2. Chip-first is only defined for
/// InFO technologies.
double assembly_cost(const SystemSpec& system, AssemblyFlow flow,
                     ChipLastConvention convention = ChipLastConvention::AsPrinted);

/// Five-part RE breakdown; NRE fields are left at zero.
CostBreakdown system_re_cost(const SystemSpec& system);

/// Good-die cost spent on D2D interface area across the system.
double d2d_die_cost(const SystemSpec& system);

}  // namespace chipcost
