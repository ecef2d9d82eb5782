#include "chipcost/reuse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "chipcost/error.hpp"
#include "chipcost/parallel.hpp"
#include "chipcost/re_cost.hpp"

namespace chipcost {

namespace {

const std::string kSharedPackage = "shared-package";

void check_quantity(std::int64_t quantity) {
    if (quantity < 1) throw Error(ErrorCode::ZeroQuantity, "quantity per system must be >= 1", "quantity");
}

void check_footprints(std::span<const ChipletRef> chiplets, const std::string& path) {
    if (chiplets.empty()) return;
    const double ref = chiplets.front()->total_area();
    for (const auto& c : chiplets) {
        if (std::abs(c->total_area() - ref) > 1e-9 * ref) {
            throw Error(ErrorCode::FootprintMismatch,
                        "chiplet '" + c->name() + "' does not share the footprint of '" +
                            chiplets.front()->name() + "'",
                        path);
        }
    }
}

std::string join_uses(const std::vector<ChipletUse>& uses) {
    std::string name;
    for (const auto& u : uses) {
        if (!name.empty()) name += '+';
        if (u.count > 1) name += std::to_string(u.count);
        name += u.chiplet->name();
    }
    return name;
}

// Rebuilds the systems on one package sized for the largest of them.
void share_package(ReuseScenario& scenario) {
    double area = 0.0;
    for (const auto& s : scenario.systems) area = std::max(area, s.package_area);
    for (auto& s : scenario.systems) {
        s.package_area = area;
        s.package_id = kSharedPackage;
    }
    scenario.package_reuse = true;
    scenario.shared_package_area = area;
}

}  // namespace

ReuseScenario scms(const ChipletRef& chiplet, std::span<const int> counts, const TechRef& tech,
                   std::int64_t quantity_each, bool package_reuse) {
    if (counts.empty()) throw Error(ErrorCode::EmptyCounts, "SCMS needs at least one chiplet count", "counts");
    check_quantity(quantity_each);
    ReuseScenario scenario;
    scenario.name = "scms";
    for (int count : counts) {
        if (count < 1) throw Error(ErrorCode::InvariantViolation, "chiplet counts must be >= 1", "counts");
        scenario.systems.push_back(
            build_system(std::to_string(count) + "X", {{chiplet, count}}, tech, quantity_each));
    }
    if (package_reuse) share_package(scenario);
    return scenario;
}

ReuseScenario ocme(const ChipletRef& center, std::span<const ChipletRef> extensions, int sockets,
                   const TechRef& tech, std::int64_t quantity_each, bool package_reuse,
                   const NodeRef& center_node_override) {
    if (sockets < 1) throw Error(ErrorCode::InvalidArgument, "OCME needs at least one socket", "sockets");
    if (static_cast<int>(extensions.size()) > sockets) {
        throw Error(ErrorCode::InvalidArgument, "more extension kinds than sockets", "sockets");
    }
    check_quantity(quantity_each);
    check_footprints(extensions, "extensions");

    ChipletRef hub = center;
    if (center_node_override) {
        std::vector<ModuleSpec> modules = center->modules();
        for (auto& m : modules) m.node = center_node_override;
        hub = make_chiplet(center->name() + "@" + center_node_override->name, std::move(modules),
                           center->d2d_area_fraction());
    }

    std::vector<std::vector<ChipletUse>> configs;
    configs.push_back({{hub, 1}});
    for (const auto& e : extensions) configs.push_back({{hub, 1}, {e, 1}});
    if (extensions.size() >= 2) {
        std::vector<ChipletUse> full{{hub, 1}};
        for (const auto& e : extensions) full.push_back({e, 1});
        full.back().count += sockets - static_cast<int>(extensions.size());
        configs.push_back(std::move(full));
    }

    ReuseScenario scenario;
    scenario.name = "ocme";
    for (auto& uses : configs) {
        std::string name = join_uses(uses);
        scenario.systems.push_back(build_system(std::move(name), std::move(uses), tech, quantity_each));
    }
    if (package_reuse) share_package(scenario);
    return scenario;
}

std::uint64_t fsmc_count(std::uint64_t n, std::uint64_t k) {
    if (n < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "FSMC count needs n >= 1 and k >= 1");
    const auto overflow = [&] {
        return Error(ErrorCode::Overflow, "FSMC count for n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                              " exceeds 64 bits");
    };
    // term_i = C(n+i-1, i) = term_{i-1} · (n+i-1) / i, divided before
    // multiplying so intermediates stay as small as the result allows.
    std::uint64_t term = 1;
    std::uint64_t total = 0;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t g = std::gcd(term, i);
        std::uint64_t factor = n + i - 1;
        if (factor < n) throw overflow();
        const std::uint64_t t = term / g;
        factor /= i / g;
        if (__builtin_mul_overflow(t, factor, &term)) throw overflow();
        if (__builtin_add_overflow(total, term, &total)) throw overflow();
    }
    return total;
}

ReuseScenario fsmc_enumerate(std::span<const ChipletRef> chiplets, int k, const TechRef& tech,
                             std::int64_t quantity_each) {
    if (chiplets.empty()) throw Error(ErrorCode::EmptyCounts, "FSMC needs at least one chiplet kind", "chiplets");
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "FSMC needs at least one socket", "sockets");
    check_quantity(quantity_each);
    check_footprints(chiplets, "chiplets");
    std::set<std::string> names;
    for (const auto& c : chiplets) {
        if (!names.insert(c->name()).second) {
            throw Error(ErrorCode::InvalidArgument, "chiplet '" + c->name() + "' listed twice", "chiplets");
        }
    }
    const std::uint64_t expected = fsmc_count(chiplets.size(), static_cast<std::uint64_t>(k));

    const double package_area =
        tech->interposer_area_factor * static_cast<double>(k) * chiplets.front()->total_area();
    ReuseScenario scenario;
    scenario.name = "fsmc";
    scenario.systems.reserve(expected);
    const int n = static_cast<int>(chiplets.size());
    for (int size = 1; size <= k; ++size) {
        // Non-decreasing index tuples of length `size`, in lexicographic order.
        std::vector<int> idx(size, 0);
        while (true) {
            std::vector<ChipletUse> uses;
            for (int i : idx) {
                if (!uses.empty() && uses.back().chiplet == chiplets[i]) {
                    ++uses.back().count;
                } else {
                    uses.push_back({chiplets[i], 1});
                }
            }
            std::string name = join_uses(uses);
            scenario.systems.push_back(
                build_system(std::move(name), std::move(uses), tech, quantity_each, package_area, kSharedPackage));

            int pos = size - 1;
            while (pos >= 0 && idx[pos] == n - 1) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int j = pos + 1; j < size; ++j) idx[j] = idx[pos];
        }
    }
    scenario.package_reuse = true;
    scenario.shared_package_area = package_area;
    if (scenario.systems.size() != expected) {
        throw Error(ErrorCode::InvariantViolation, "FSMC enumeration disagrees with its count");
    }
    return scenario;
}

ScenarioAnalysis analyze(const ReuseScenario& scenario, int jobs) {
    const auto& systems = scenario.systems;
    ScenarioAnalysis out;
    out.name = scenario.name;
    out.ledger = group_nre(systems);
    const std::vector<NreShare> shares = amortize(out.ledger, systems);
    const std::vector<CostBreakdown> re =
        parallel_map(systems.size(), jobs, [&](std::size_t i) { return system_re_cost(systems[i]); });

    double units = 0.0;
    for (std::size_t i = 0; i < systems.size(); ++i) {
        CostBreakdown b = re[i];
        b.nre_modules = shares[i].nre_modules;
        b.nre_chips = shares[i].nre_chips;
        b.nre_packages = shares[i].nre_packages;
        b.nre_d2d = shares[i].nre_d2d;
        out.systems.push_back({systems[i].name, systems[i].quantity, b, 0.0});
        out.reference = std::max(out.reference, b.re_total());
        const double q = static_cast<double>(systems[i].quantity);
        out.total += b.total() * q;
        units += q;
    }
    if (units > 0.0) out.mean_unit_cost = out.total / units;
    if (out.reference > 0.0) {
        for (auto& s : out.systems) s.normalized = s.cost.total() / out.reference;
        out.mean_normalized = out.mean_unit_cost / out.reference;
    }
    return out;
}

SystemSpec soc_equivalent(const SystemSpec& system, const TechRef& soc_tech, const NodeRef& node) {
    std::vector<ModuleSpec> modules;
    for (const auto& use : system.chiplets) {
        for (int i = 0; i < use.count; ++i) {
            for (ModuleSpec m : use.chiplet->modules()) {
                if (node) m.node = node;
                modules.push_back(std::move(m));
            }
        }
    }
    auto die = make_chiplet(system.name, std::move(modules));
    return build_system(system.name, {{die, 1}}, soc_tech, system.quantity);
}

ScenarioAnalysis analyze_as_soc(const ReuseScenario& scenario, const TechRef& soc_tech, int jobs) {
    ReuseScenario socs;
    socs.name = scenario.name + "-soc";
    for (const auto& s : scenario.systems) socs.systems.push_back(soc_equivalent(s, soc_tech));
    return analyze(socs, jobs);
}

}  // namespace chipcost
