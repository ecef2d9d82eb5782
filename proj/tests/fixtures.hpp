#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "chipcost/catalog.hpp"
#include "chipcost/core.hpp"

namespace fixture {

inline chipcost::NodeRef node(double defects_per_mm2, double wafer_cost = 10000.0, double c = 3.0) {
    chipcost::ProcessNode n;
    n.name = "test";
    n.defect_density = defects_per_mm2;
    n.cluster_param = c;
    n.wafer_cost = wafer_cost;
    n.nre_module_factor = 1000.0;
    n.nre_chip_factor = 2000.0;
    n.fixed_chip_nre = 1.0e6;
    n.d2d_nre_cost = 5.0e5;
    return std::make_shared<const chipcost::ProcessNode>(n);
}

/// A tech with every packaging yield at one and nothing to pay for bonding.
inline chipcost::TechRef perfect_tech(chipcost::TechKind kind, const chipcost::NodeRef& interposer = nullptr) {
    chipcost::IntegrationTech t;
    t.name = "perfect";
    t.kind = kind;
    t.substrate_cost_per_area = 0.05;
    t.interposer_node = interposer;
    t.package_nre_factor = 100.0;
    t.package_fixed_nre = 1.0e5;
    return std::make_shared<const chipcost::IntegrationTech>(t);
}

inline const chipcost::Catalog& catalog() {
    static const chipcost::Catalog cat = chipcost::default_catalog();
    return cat;
}

inline double rel_err(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace fixture
