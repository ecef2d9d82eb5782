#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chipcost/core.hpp"

namespace chipcost {

struct SweepRow {
    int chiplet_count = 1;
    std::string tech;
    CostBreakdown cost;   ///< RE fields only
    double normalized = 0.0;  ///< RE total / reference
};

struct SweepResult {
    std::string axis = "chiplet_count";
    double total_module_area = 0.0;
    std::string node;
    /// RE total of a 100 mm² monolithic die at the swept node, packaged with
    /// the first monolithic technology of the sweep (bare good-die cost when
    /// the sweep has none).
    double reference = 0.0;
    std::vector<SweepRow> rows;  ///< by chiplet count, then technology order
};

/// Splits `total_module_area` into `count` equal chiplets for every
/// (count, tech) pair and evaluates the RE breakdown. A single chiplet
/// carries no D2D interface; monolithic technologies are only evaluated at
/// count 1.
SweepResult partition_sweep(double total_module_area, std::span<const int> chiplet_counts,
                            std::span<const TechRef> techs, const NodeRef& node, double d2d_fraction,
                            int jobs = 1);

/// The equal-split system partition_sweep evaluates for one cell.
SystemSpec partition_system(double total_module_area, int count, const TechRef& tech, const NodeRef& node,
                            double d2d_fraction, std::int64_t quantity = 1);

/// RE plus NRE per unit when the system is produced alone in `quantity`
/// units.
double unit_total_cost(const SystemSpec& system, std::int64_t quantity);

enum class BreakEvenStatus { Found, NoCrossover, RangeExhausted };

const char* to_string(BreakEvenStatus status);

struct BreakEvenResult {
    BreakEvenStatus status = BreakEvenStatus::NoCrossover;
    std::int64_t quantity = 0;  ///< valid when Found
    double re_delta = 0.0;      ///< multi − SoC, per unit
    double nre_delta = 0.0;     ///< multi − SoC, whole design
};

/// Smallest quantity in [lo, hi] at which the multi-chip unit total is no
/// more than the SoC's. The difference is re_delta + nre_delta/q, monotone in
/// q, so integer bisection is exact. RangeExhausted means the multi-chip
/// system has the lower RE but does not pay back by `hi`.
BreakEvenResult break_even_quantity(const SystemSpec& soc, const SystemSpec& multi, std::int64_t lo,
                                    std::int64_t hi);

struct GranularityStep {
    int chiplet_count = 1;
    double re_total = 0.0;
    double chip_defects = 0.0;
    double defect_saving = 0.0;  ///< chip defects at count − 1 minus at count
    double re_saving = 0.0;      ///< RE total at count − 1 minus at count
};

/// Counts 1..max_count of the equal split under one technology.
std::vector<GranularityStep> granularity_marginal_series(double total_module_area, int max_count,
                                                         const TechRef& tech, const NodeRef& node,
                                                         double d2d_fraction);

/// Share of the RE total spent on integration: packaging plus the good-die
/// cost of D2D interface area.
double integration_overhead_share(const SystemSpec& system);

}  // namespace chipcost
