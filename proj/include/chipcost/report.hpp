#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "chipcost/explorer.hpp"
#include "chipcost/reuse.hpp"
#include "chipcost/yield.hpp"

namespace chipcost {

struct BreakdownRow {
    std::string system;
    CostBreakdown cost;
};

/// system,raw_chips,chip_defects,raw_package,package_defects,wasted_kgd, then
/// the amortized NRE columns, the totals and total/reference.
std::string breakdown_csv(const std::vector<BreakdownRow>& rows, double reference);

nlohmann::json breakdown_to_json(const CostBreakdown& cost);

std::string sweep_csv(const SweepResult& sweep);

nlohmann::json scenario_to_json(const ScenarioAnalysis& analysis);

/// Stacked bars, one per label; `series[i][j]` is component i of bar j.
std::string stacked_bar_svg(const std::string& title, const std::vector<std::string>& labels,
                            const std::vector<std::string>& series_names,
                            const std::vector<std::vector<double>>& series);

std::string curves_svg(const std::string& title, const std::vector<std::string>& names,
                       const std::vector<std::vector<CurvePoint>>& curves);

/// Bar chart input for a list of breakdowns: the five RE parts and the NRE
/// total.
std::string breakdown_svg(const std::string& title, const std::vector<BreakdownRow>& rows);

/// Writes to a temporary sibling and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace chipcost
