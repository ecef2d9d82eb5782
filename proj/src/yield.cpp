#include "chipcost/yield.hpp"

#include <cmath>
#include <numbers>

#include "chipcost/error.hpp"
#include "chipcost/format.hpp"

namespace chipcost {

namespace {

void check_area(double area) {
    if (!std::isfinite(area) || area < 0.0) {
        throw Error(ErrorCode::NegativeArea, "die area must be >= 0, got " + format_number(area));
    }
}

}  // namespace

double die_yield(double area, const ProcessNode& node) {
    check_area(area);
    const double c = node.cluster_param;
    return std::pow(1.0 + node.defect_density * area / c, -c);
}

double gross_dies_estimate(double area, const ProcessNode& node, double aspect_ratio) {
    check_area(area);
    if (area == 0.0) {
        throw Error(ErrorCode::InvalidArgument, "dies per wafer needs a positive die area");
    }
    if (!(aspect_ratio >= 0.2 && aspect_ratio <= 5.0)) {
        throw Error(ErrorCode::InvalidArgument, "die aspect ratio must lie in [0.2, 5]");
    }
    const double r = node.usable_radius();
    const double w = std::sqrt(area * aspect_ratio);
    const double h = area / w;
    return std::numbers::pi * r * r / area - std::numbers::pi * r * (w + h) / (2.0 * area);
}

std::int64_t dies_per_wafer(double area, const ProcessNode& node, double aspect_ratio) {
    const double estimate = gross_dies_estimate(area, node, aspect_ratio);
    if (estimate < 1.0) {
        throw Error(ErrorCode::DieLargerThanWafer,
                    "a " + format_number(area) + " mm² die does not fit on a " +
                        format_number(node.wafer_diameter) + " mm wafer");
    }
    return static_cast<std::int64_t>(std::floor(estimate));
}

DieCost die_cost(double area, const ProcessNode& node) {
    const double estimate = gross_dies_estimate(area, node);
    if (estimate < 1.0) {
        throw Error(ErrorCode::DieLargerThanWafer,
                    "a " + format_number(area) + " mm² die does not fit on a " +
                        format_number(node.wafer_diameter) + " mm wafer");
    }
    DieCost cost;
    cost.raw = node.wafer_cost / estimate + node.die_test_cost;
    cost.defect = cost.raw * (1.0 / die_yield(area, node) - 1.0);
    return cost;
}

double overall_serial_yield(std::span<const double> stage_yields) {
    double y = 1.0;
    for (double s : stage_yields) {
        if (!(std::isfinite(s) && s > 0.0 && s <= 1.0)) {
            throw Error(ErrorCode::OutOfRangeYield, "stage yield " + format_number(s) + " is outside (0, 1]");
        }
        y *= s;
    }
    return y;
}

std::vector<CurvePoint> cost_yield_curve(const ProcessNode& node, double area_min, double area_max, double step) {
    if (!(area_min > 0.0 && area_max <= 900.0 && area_min <= area_max)) {
        throw Error(ErrorCode::InvalidArgument, "curve range must lie within (0, 900] mm²");
    }
    if (!(step > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "curve step must be > 0");
    }
    const double wafer_area = std::numbers::pi * node.wafer_diameter * node.wafer_diameter / 4.0;
    const double cost_per_mm2 = node.wafer_cost / wafer_area;

    std::vector<CurvePoint> points;
    // Index-based sampling keeps shared points bit-identical when the step is halved.
    const auto n = static_cast<std::int64_t>(std::floor((area_max - area_min) / step * (1.0 + 1e-12)));
    for (std::int64_t i = 0; i <= n; ++i) {
        const double area = area_min + static_cast<double>(i) * step;
        const DieCost cost = die_cost(area, node);
        const double good = cost.good();
        points.push_back({area, die_yield(area, node), cost_per_mm2 > 0.0 ? good / cost_per_mm2 : 0.0});
    }
    return points;
}

std::string curve_csv(const std::vector<CurvePoint>& points) {
    std::string out = "area_mm2,yield,normalized_cost\n";
    for (const auto& p : points) {
        out += format_number(p.area);
        out += ',';
        out += format_number(p.yield);
        out += ',';
        out += format_number(p.normalized_cost);
        out += '\n';
    }
    return out;
}

}  // namespace chipcost
