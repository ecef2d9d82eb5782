#pragma once

// Reuse schemes over groups of systems:
//   SCMS  one chiplet, several systems with different chiplet counts
//   OCME  one center die plus extension dies of a common footprint
//   FSMC  a k-socket package filled with any multiset of n chiplet kinds

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chipcost/core.hpp"
#include "chipcost/nre_cost.hpp"

namespace chipcost {

struct ReuseScenario {
    std::string name;
    std::vector<SystemSpec> systems;
    bool package_reuse = false;
    double shared_package_area = 0.0;  ///< 0 unless package_reuse
};

/// One system per count, named "<count>X". With package reuse every system
/// sits on the package sized for the largest count.
ReuseScenario scms(const ChipletRef& chiplet, std::span<const int> counts, const TechRef& tech,
                   std::int64_t quantity_each, bool package_reuse);

/// Systems {C}, {C,e} for each extension e, and, with two or more extensions,
/// {C, e1, ..., em} with em repeated until `sockets` extension sockets are
/// filled. With a node override the center is rebuilt at that node and named
/// "<center>@<node>".
ReuseScenario ocme(const ChipletRef& center, std::span<const ChipletRef> extensions, int sockets,
                   const TechRef& tech, std::int64_t quantity_each, bool package_reuse,
                   const NodeRef& center_node_override = nullptr);

/// Σ_{i=1..k} C(n+i−1, i): the number of non-empty multisets of size ≤ k over
/// n kinds. Exact; throws Overflow rather than wrapping.
std::uint64_t fsmc_count(std::uint64_t n, std::uint64_t k);

/// Every multiset of size 1..k over the chiplets, ordered by size and then
/// lexicographically by chiplet position. All systems share one k-socket
/// package.
ReuseScenario fsmc_enumerate(std::span<const ChipletRef> chiplets, int k, const TechRef& tech,
                             std::int64_t quantity_each);

struct SystemResult {
    std::string name;
    std::int64_t quantity = 0;
    CostBreakdown cost;
    double normalized = 0.0;  ///< total / scenario reference
};

struct ScenarioAnalysis {
    std::string name;
    std::vector<SystemResult> systems;
    NreLedger ledger;
    double total = 0.0;            ///< Σ unit total × quantity
    double mean_unit_cost = 0.0;   ///< quantity-weighted mean unit total
    double reference = 0.0;        ///< largest per-unit RE total in the scenario
    double mean_normalized = 0.0;  ///< quantity-weighted mean of `normalized`
};

/// RE per system plus NRE of the whole scenario as one group, amortized over
/// all units. RE evaluation fans out over `jobs` threads.
ScenarioAnalysis analyze(const ReuseScenario& scenario, int jobs = 1);

/// The system as one monolithic die holding all of its modules (with
/// multiplicity), moved to `node` when given.
SystemSpec soc_equivalent(const SystemSpec& system, const TechRef& soc_tech, const NodeRef& node = nullptr);

/// analyze() of the scenario with every system replaced by its SoC
/// equivalent and no package sharing.
ScenarioAnalysis analyze_as_soc(const ReuseScenario& scenario, const TechRef& soc_tech, int jobs = 1);

}  // namespace chipcost
