#include "chipcost/explorer.hpp"

#include <algorithm>
#include <map>

#include "chipcost/error.hpp"
#include "chipcost/nre_cost.hpp"
#include "chipcost/parallel.hpp"
#include "chipcost/re_cost.hpp"

namespace chipcost {

namespace {

constexpr double kReferenceArea = 100.0;

std::map<std::string, int> module_multiset(const SystemSpec& s) {
    std::map<std::string, int> names;
    for (const auto& use : s.chiplets) {
        for (const auto& m : use.chiplet->modules()) names[m.name] += use.count;
    }
    return names;
}

}  // namespace

SystemSpec partition_system(double total_module_area, int count, const TechRef& tech, const NodeRef& node,
                            double d2d_fraction, std::int64_t quantity) {
    if (count < 1) throw Error(ErrorCode::InvalidArgument, "chiplet count must be >= 1", "counts");
    if (!(total_module_area > 0.0)) {
        throw Error(ErrorCode::InvariantViolation, "module area must be > 0", "total_module_area");
    }
    const double fraction = count == 1 ? 0.0 : d2d_fraction;
    const std::string label = std::to_string(count) + "x" + tech->name;
    auto chiplet = make_chiplet("part", {{"slice", total_module_area / count, node}}, fraction);
    return build_system(label, {{chiplet, count}}, tech, quantity);
}

SweepResult partition_sweep(double total_module_area, std::span<const int> chiplet_counts,
                            std::span<const TechRef> techs, const NodeRef& node, double d2d_fraction, int jobs) {
    SweepResult out;
    out.total_module_area = total_module_area;
    out.node = node->name;

    TechRef soc_tech;
    for (const auto& t : techs) {
        if (t->kind == TechKind::Monolithic) {
            soc_tech = t;
            break;
        }
    }
    out.reference = soc_tech ? system_re_cost(partition_system(kReferenceArea, 1, soc_tech, node, 0.0)).re_total()
                             : die_cost(kReferenceArea, *node).good();

    std::vector<int> counts(chiplet_counts.begin(), chiplet_counts.end());
    std::sort(counts.begin(), counts.end());
    counts.erase(std::unique(counts.begin(), counts.end()), counts.end());

    std::vector<std::pair<int, TechRef>> cells;
    for (int count : counts) {
        for (const auto& t : techs) {
            if (t->kind == TechKind::Monolithic && count > 1) continue;
            cells.emplace_back(count, t);
        }
    }
    out.rows = parallel_map(cells.size(), jobs, [&](std::size_t i) {
        const auto& [count, tech] = cells[i];
        SweepRow row;
        row.chiplet_count = count;
        row.tech = tech->name;
        row.cost = system_re_cost(partition_system(total_module_area, count, tech, node, d2d_fraction));
        row.normalized = row.cost.re_total() / out.reference;
        return row;
    });
    return out;
}

double unit_total_cost(const SystemSpec& system, std::int64_t quantity) {
    SystemSpec s = system;
    s.quantity = quantity;
    const SystemSpec group[] = {s};
    return system_re_cost(s).re_total() + group_nre(group).total() / static_cast<double>(quantity);
}

const char* to_string(BreakEvenStatus status) {
    switch (status) {
        case BreakEvenStatus::Found: return "found";
        case BreakEvenStatus::NoCrossover: return "no-crossover";
        case BreakEvenStatus::RangeExhausted: return "range-exhausted";
    }
    return "unknown";
}

BreakEvenResult break_even_quantity(const SystemSpec& soc, const SystemSpec& multi, std::int64_t lo,
                                    std::int64_t hi) {
    if (lo < 1 || hi < lo) throw Error(ErrorCode::InvalidArgument, "search range must satisfy 1 <= lo <= hi", "range");
    if (module_multiset(soc) != module_multiset(multi)) {
        throw Error(ErrorCode::InvalidArgument,
                    "systems '" + soc.name + "' and '" + multi.name + "' implement different module sets",
                    "systems");
    }

    BreakEvenResult r;
    r.re_delta = system_re_cost(multi).re_total() - system_re_cost(soc).re_total();
    const SystemSpec soc_group[] = {soc};
    const SystemSpec multi_group[] = {multi};
    r.nre_delta = group_nre(multi_group).total() - group_nre(soc_group).total();

    const auto pays_back = [&](std::int64_t q) {
        return unit_total_cost(multi, q) <= unit_total_cost(soc, q);
    };

    if (r.nre_delta <= 0.0) {
        // The difference only grows with quantity; the lower bound decides.
        if (pays_back(lo)) {
            r.status = BreakEvenStatus::Found;
            r.quantity = lo;
        }
        return r;
    }
    if (!pays_back(hi)) {
        r.status = r.re_delta < 0.0 ? BreakEvenStatus::RangeExhausted : BreakEvenStatus::NoCrossover;
        return r;
    }
    std::int64_t a = lo;
    std::int64_t b = hi;
    while (a < b) {
        const std::int64_t mid = a + (b - a) / 2;
        if (pays_back(mid)) {
            b = mid;
        } else {
            a = mid + 1;
        }
    }
    r.status = BreakEvenStatus::Found;
    r.quantity = a;
    return r;
}

std::vector<GranularityStep> granularity_marginal_series(double total_module_area, int max_count,
                                                         const TechRef& tech, const NodeRef& node,
                                                         double d2d_fraction) {
    if (max_count < 2) throw Error(ErrorCode::InvalidArgument, "granularity series needs max_count >= 2", "max_count");
    if (tech->kind == TechKind::Monolithic) {
        throw Error(ErrorCode::InvalidArgument, "granularity series needs a multi-chip technology", "tech");
    }
    std::vector<GranularityStep> series;
    for (int count = 1; count <= max_count; ++count) {
        const CostBreakdown b = system_re_cost(partition_system(total_module_area, count, tech, node, d2d_fraction));
        GranularityStep step{count, b.re_total(), b.chip_defects, 0.0, 0.0};
        if (!series.empty()) {
            step.defect_saving = series.back().chip_defects - step.chip_defects;
            step.re_saving = series.back().re_total - step.re_total;
        }
        series.push_back(step);
    }
    return series;
}

double integration_overhead_share(const SystemSpec& system) {
    const CostBreakdown b = system_re_cost(system);
    return (b.packaging() + d2d_die_cost(system)) / b.re_total();
}

}  // namespace chipcost
