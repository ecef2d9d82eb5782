#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chipcost/core.hpp"

namespace chipcost {

/// Negative-binomial die yield (1 + D·S/c)^(-c).
double die_yield(double area, const ProcessNode& node);

/// Expected number of whole w×h dies on the usable wafer disc of radius r:
///   π·r²/S − π·r·(w + h)/(2·S),
/// which reduces to π·r²/S − π·r/√S for square dies. Fractional; this is the
/// count used for costing.
double gross_dies_estimate(double area, const ProcessNode& node, double aspect_ratio = 1.0);

/// Whole dies per wafer: floor of gross_dies_estimate. Throws
/// DieLargerThanWafer when fewer than one die fits.
std::int64_t dies_per_wafer(double area, const ProcessNode& node, double aspect_ratio = 1.0);

struct DieCost {
    double raw = 0.0;     ///< wafer share plus test adder, at unit yield
    double defect = 0.0;  ///< raw · (1/Y − 1)

    double good() const { return raw + defect; }
};

DieCost die_cost(double area, const ProcessNode& node);

/// Product of serial stage yields, each in (0, 1].
double overall_serial_yield(std::span<const double> stage_yields);

struct CurvePoint {
    double area = 0.0;
    double yield = 0.0;
    /// Good-die cost divided by the raw-wafer cost per mm².
    double normalized_cost = 0.0;
};

/// Samples area_min, area_min + step, ... up to area_max (inclusive).
std::vector<CurvePoint> cost_yield_curve(const ProcessNode& node, double area_min, double area_max, double step);

std::string curve_csv(const std::vector<CurvePoint>& points);

}  // namespace chipcost
