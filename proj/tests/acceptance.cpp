// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chipcost/catalog.hpp"
#include "chipcost/cli.hpp"
#include "chipcost/document.hpp"
#include "chipcost/explorer.hpp"
#include "chipcost/nre_cost.hpp"
#include "chipcost/re_cost.hpp"
#include "chipcost/reuse.hpp"
#include "chipcost/yield.hpp"
#include "oracles.hpp"

using namespace chipcost;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Criterion 1
constexpr double kYieldRelTol = 1e-12;
constexpr double kPoissonTol = 1e-4;
constexpr double kYieldBudgetMs = 1000;
// Criterion 2
constexpr double kPackingTol = 0.05;
constexpr double kPackingBudgetMs = 30000;
// Criterion 3
constexpr double kDegenerationBudgetMs = 1000;
// Criterion 4
constexpr double kAmdDieSavingLo = 0.40, kAmdDieSavingHi = 0.60;
constexpr double kAmdPackagingLo = 0.20, kAmdPackagingHi = 0.40;
constexpr double kAmdBudgetMs = 1000;
// Criterion 5
constexpr double kMonoDefectShareMin = 0.50;
constexpr double kBestSaving14Max = 0.35;
constexpr double kOverhead25d14Min = 0.50;
constexpr double kGranularity35Max = 0.10;
constexpr double kThresholdBudgetMs = 5000;
// Criterion 6
constexpr std::int64_t kBreakEvenLo = 1'000'000, kBreakEvenHi = 4'000'000;
constexpr int kRandomCatalogs = 20;
constexpr std::int64_t kScanLimit = 200'000;
constexpr std::int64_t kScanQuantityTol = 1;  // ties at the crossover may round either way
// Criterion 8
constexpr double kScmsIncreaseMin = 0.20;
constexpr double kScmsPackageCut = 2.0 / 3.0, kScmsPackageCutTol = 0.10;
constexpr double kOcmeSaving = 0.10, kOcmeSavingTol = 0.05;
constexpr double kFsmcNreShareMax = 0.05;
constexpr double kReuseBudgetMs = 10000;
// Criterion 9
constexpr double kConservationTol = 1e-9;
constexpr double kScalingTol = 1e-9;
constexpr double kScaleFactors[] = {0.25, 3.0, 1000.0};

const fs::path kSource = CHIPCOST_SOURCE_DIR;
const fs::path kExamples = kSource / "share" / "examples";

double rel_err(double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

struct Verdict {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
        }
    }
    void note(const std::string& text) { detail += (detail.empty() ? "" : "; ") + text; }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

int failures = 0;

void criterion(int id, const std::function<void(Verdict&)>& body, double budget_ms = 0.0) {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(v);
    } catch (const std::exception& e) {
        v.require(false, std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (budget_ms > 0.0) v.require(ms < budget_ms, "runtime over " + fmt("%.0f ms", budget_ms));
    if (!v.pass) ++failures;
    std::printf("criterion %d: %s (%.1f ms) %s\n", id, v.pass ? "PASS" : "FAIL", ms, v.detail.c_str());
    std::fflush(stdout);
}

ProcessNode bare_node(double d, double c) {
    ProcessNode n;
    n.name = "n";
    n.defect_density = d;
    n.cluster_param = c;
    n.wafer_cost = 10000.0;
    return n;
}

void yield_model(Verdict& v) {
    double worst = 0.0;
    for (double d : {0.0, 0.0005, 0.0013, 0.002}) {
        for (double c : {1.0, 3.0, 6.0}) {
            const ProcessNode n = bare_node(d, c);
            for (int s = 1; s <= 900; ++s) worst = std::max(worst, rel_err(die_yield(s, n), oracle::nb_yield(d, s, c)));
        }
    }
    v.require(worst < kYieldRelTol, "yield grid");
    double poisson = 0.0;
    for (double d : {0.0005, 0.0013, 0.002}) {
        for (int s = 1; s <= 900; s += 7) {
            poisson = std::max(poisson, std::abs(die_yield(s, bare_node(d, 1e6)) - std::exp(-d * s)));
        }
    }
    v.require(poisson < kPoissonTol, "Poisson limit");
    v.note("max rel err " + fmt("%.2e", worst) + ", Poisson gap " + fmt("%.2e", poisson));
}

void packing(Verdict& v) {
    const ProcessNode n = bare_node(0.001, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 30; ++i) {
        const double area = 10.0 + i * 30.0;  // 10 .. 880 mm2
        const double side = std::sqrt(area);
        const auto grid = static_cast<double>(oracle::grid_dies(n.usable_radius(), side, side));
        worst = std::max(worst, std::abs(static_cast<double>(dies_per_wafer(area, n)) - grid) / grid);
    }
    v.require(worst <= kPackingTol, "dies per wafer vs grid");
    v.note("worst deviation " + fmt("%.4f", worst));
}

std::shared_ptr<const IntegrationTech> ideal_tech(TechKind kind, NodeRef interposer) {
    IntegrationTech t;
    t.name = to_string(kind);
    t.kind = kind;
    t.substrate_cost_per_area = 0.02;
    t.substrate_yield = 1.0;
    t.chip_bond_yield = 1.0;
    t.bond_cost_per_chip = 0.0;
    t.interposer_node = std::move(interposer);
    return std::make_shared<const IntegrationTech>(t);
}

void degenerations(Verdict& v) {
    auto perfect = std::make_shared<const ProcessNode>(bare_node(0.0, 3.0));
    bool zero = true, flows = true;
    for (auto kind : {TechKind::MCM, TechKind::InfoChipFirst, TechKind::InfoChipLast, TechKind::Interposer2p5D}) {
        const bool interposer = kind != TechKind::MCM;
        auto tech = ideal_tech(kind, interposer ? perfect : nullptr);
        auto chip = make_chiplet("c", {{"m", 120.0, perfect}}, 0.1);
        for (int count = 1; count <= 4; ++count) {
            const SystemSpec s = build_system("s", {{chip, count}}, tech, 1);
            const CostBreakdown b = system_re_cost(s);
            zero = zero && b.chip_defects == 0.0 && b.package_defects == 0.0 && b.wasted_kgd == 0.0;
            if (kind == TechKind::InfoChipFirst) {
                auto last = ideal_tech(TechKind::InfoChipLast, perfect);
                SystemSpec s2 = s;
                s2.tech = last;
                const double a = assembly_cost(s, AssemblyFlow::ChipFirst);
                flows = flows && a == assembly_cost(s2, AssemblyFlow::ChipLast, ChipLastConvention::AsPrinted) &&
                        a == assembly_cost(s2, AssemblyFlow::ChipLast, ChipLastConvention::PackageOutsideBonding);
            }
        }
    }
    v.require(zero, "defect and KGD terms vanish at unit yields");
    v.require(flows, "chip-first equals chip-last at unit yields and free bonding");

    const Catalog cat = default_catalog();
    bool increasing = true;
    for (const char* tech : {"MCM", "InFO", "2.5D"}) {
        auto chip = make_chiplet("c", {{"m", 100.0, cat.node("7nm")}}, 0.1);
        double prev = -1.0;
        for (int count = 1; count <= 8; ++count) {
            const double w = system_re_cost(build_system("s", {{chip, count}}, cat.tech(tech), 1)).wasted_kgd;
            increasing = increasing && w > prev;
            prev = w;
        }
    }
    v.require(increasing, "wasted KGD strictly increasing in chip count");
}

CostBreakdown re_of(const Document& d, const std::string& name) { return system_re_cost(d.system(name, "test")); }

void amd(Verdict& v) {
    const Document d = load_document_file((kExamples / "amd-epyc.json").string(), default_catalog());
    const CostBreakdown soc = re_of(d, "soc-64"), multi = re_of(d, "epyc-64");
    const double saving = 1.0 - multi.chips() / soc.chips();
    const CostBreakdown small = re_of(d, "epyc-16");
    const double share = small.packaging() / small.re_total();
    v.require(saving >= kAmdDieSavingLo && saving <= kAmdDieSavingHi, "8-chiplet die cost saving");
    v.require(share >= kAmdPackagingLo && share <= kAmdPackagingHi, "2-chiplet packaging share");
    v.note("die saving " + fmt("%.3f", saving) + ", packaging share " + fmt("%.3f", share));
}

void thresholds(Verdict& v) {
    const Catalog cat = default_catalog();
    const std::vector<TechRef> techs{cat.tech("SoC"), cat.tech("MCM"), cat.tech("InFO"), cat.tech("2.5D")};
    const std::vector<int> counts{1, 2, 3, 4, 5};

    const SweepResult s5 = partition_sweep(800.0, counts, techs, cat.node("5nm"), 0.1);
    const double defect_share = s5.rows.front().cost.chip_defects / s5.rows.front().cost.re_total();
    v.require(defect_share > kMonoDefectShareMin, "5nm monolithic defect share");

    const SweepResult s14 = partition_sweep(800.0, counts, techs, cat.node("14nm"), 0.1);
    const double mono = s14.rows.front().cost.re_total();
    double best = -1.0;
    for (const auto& r : s14.rows) {
        if (r.chiplet_count > 1) best = std::max(best, 1.0 - r.cost.re_total() / mono);
    }
    v.require(best <= kBestSaving14Max, "14nm best multi-chip saving");

    double overhead = 1.0;
    for (int c = 2; c <= 5; ++c) {
        overhead = std::min(overhead,
                            integration_overhead_share(partition_system(800.0, c, cat.tech("2.5D"), cat.node("14nm"), 0.1)));
    }
    v.require(overhead > kOverhead25d14Min, "14nm 2.5D integration overhead");

    // Die-defect saving from three to five chiplets, as a share of the
    // monolithic RE (the bar every configuration is read against).
    const auto g = granularity_marginal_series(800.0, 5, cat.tech("MCM"), cat.node("5nm"), 0.1);
    const double gran = (g[3].defect_saving + g[4].defect_saving) / s5.rows.front().cost.re_total();
    const double vs_three = (g[2].re_total - g[4].re_total) / g[2].re_total;
    v.require(gran < kGranularity35Max, "3 to 5 chiplet defect saving");
    v.note("defect share " + fmt("%.3f", defect_share) + ", 14nm best saving " + fmt("%.3f", best) +
           ", 2.5D overhead min " + fmt("%.3f", overhead) + ", 3->5 defect saving " + fmt("%.4f", gran) +
           " (RE saving vs 3 chiplets " + fmt("%.4f", vs_three) + ")");
}

struct PairSpec {
    SystemSpec soc, multi;
};

PairSpec split_pair(const Catalog& cat, const char* node, double area, const char* tech) {
    const auto n = cat.node(node);
    auto die = make_chiplet("soc", {{"left", area / 2, n}, {"right", area / 2, n}});
    auto l = make_chiplet("L", {{"left", area / 2, n}}, 0.1);
    auto r = make_chiplet("R", {{"right", area / 2, n}}, 0.1);
    return {build_system("soc", {{die, 1}}, cat.tech("SoC"), 1),
            build_system("multi", {{l, 1}, {r, 1}}, cat.tech(tech), 1)};
}

// Per-unit RE and whole-group NRE of a system produced alone, taken apart
// so the scan below does its own arithmetic.
std::pair<double, double> re_and_nre(const SystemSpec& s) {
    const SystemSpec group[] = {s};
    return {system_re_cost(s).re_total(), group_nre(group).total()};
}

// First quantity in [lo, hi] where the multi-chip unit cost is no higher.
std::int64_t scan_break_even(const SystemSpec& soc, const SystemSpec& multi, std::int64_t lo, std::int64_t hi) {
    const auto [re_s, nre_s] = re_and_nre(soc);
    const auto [re_m, nre_m] = re_and_nre(multi);
    for (std::int64_t q = lo; q <= hi; ++q) {
        const double qd = static_cast<double>(q);
        if (re_m + nre_m / qd <= re_s + nre_s / qd) return q;
    }
    return -1;
}

void break_even(Verdict& v) {
    const Catalog cat = default_catalog();
    const PairSpec p = split_pair(cat, "5nm", 800.0, "MCM");
    const BreakEvenResult r = break_even_quantity(p.soc, p.multi, 1, 100'000'000);
    v.require(r.status == BreakEvenStatus::Found && r.quantity >= kBreakEvenLo && r.quantity <= kBreakEvenHi,
              "5nm 800 mm2 break-even range");
    v.note(std::string("break-even ") + to_string(r.status) + " at " + std::to_string(r.quantity));

    std::mt19937_64 rng(20240517);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int agree = 0, found = 0;
    for (int i = 0; i < kRandomCatalogs; ++i) {
        const json overrides = {
            {"nodes",
             {{"5nm",
               {{"defect_density_per_cm2", 0.05 + 0.25 * u(rng)},
                {"wafer_cost", 5000.0 + 15000.0 * u(rng)},
                {"nre_chip_fixed", 1e5 + 5e6 * u(rng)},
                {"nre_d2d", 1e4 + 2e6 * u(rng)}}}}},
            {"techs", {{"MCM", {{"package_nre_fixed", 1e4 + 1e6 * u(rng)}, {"bond_cost_per_chip", 2.0 * u(rng)}}}}}};
        const Catalog rc = apply_overrides(cat, overrides, "random");
        const PairSpec q = split_pair(rc, "5nm", 300.0 + 600.0 * u(rng), "MCM");
        const BreakEvenResult b = break_even_quantity(q.soc, q.multi, 1, kScanLimit);
        const std::int64_t scan = scan_break_even(q.soc, q.multi, 1, kScanLimit);
        const bool same = b.status == BreakEvenStatus::Found
                              ? scan > 0 && std::llabs(scan - b.quantity) <= kScanQuantityTol
                              : scan < 0;
        agree += same;
        found += b.status == BreakEvenStatus::Found;
    }
    v.require(agree == kRandomCatalogs, "bisection vs linear scan");
    v.note(std::to_string(agree) + "/" + std::to_string(kRandomCatalogs) + " random catalogs agree (" +
           std::to_string(found) + " with a crossover in range)");
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void fsmc(Verdict& v) {
    bool brute = true;
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= 5; ++k) brute = brute && fsmc_count(n, k) == oracle::brute_multisets(n, k);
    }
    v.require(brute, "count vs brute force");
    v.require(fsmc_count(6, 4) == 209, "six kinds in four sockets");
    const std::string doc = slurp(kSource / "docs" / "model.md");
    v.require(doc.find("119") != std::string::npos && doc.find("209") != std::string::npos,
              "docs/model.md records 209 against 119");
}

void reuse(Verdict& v) {
    const Catalog cat = default_catalog();
    const auto n7 = cat.node("7nm");
    auto tile = make_chiplet("T", {{"t", 200.0, n7}}, 0.1);
    const int counts[] = {1, 2, 4};
    const ScenarioAnalysis plain = analyze(scms(tile, counts, cat.tech("MCM"), 500000, false));
    const ScenarioAnalysis shared = analyze(scms(tile, counts, cat.tech("MCM"), 500000, true));
    const double increase = shared.systems[0].cost.total() / plain.systems[0].cost.total() - 1.0;
    const double cut = 1.0 - shared.systems[2].cost.nre_packages / plain.systems[2].cost.nre_packages;
    v.require(increase > kScmsIncreaseMin, "SCMS 1X increase under package reuse");
    v.require(std::abs(cut - kScmsPackageCut) <= kScmsPackageCutTol, "SCMS 4X package NRE cut");

    auto c = make_chiplet("C", {{"center", 160.0, n7}}, 0.1);
    const std::vector<ChipletRef> ext{make_chiplet("X", {{"x", 160.0, n7}}, 0.1),
                                      make_chiplet("Y", {{"y", 160.0, n7}}, 0.1)};
    const double homo = analyze(ocme(c, ext, 4, cat.tech("MCM"), 500000, true)).total;
    const double hetero = analyze(ocme(c, ext, 4, cat.tech("MCM"), 500000, true, cat.node("14nm"))).total;
    const double ocme_saving = 1.0 - hetero / homo;
    v.require(ocme_saving > kOcmeSaving - kOcmeSavingTol, "OCME heterogeneous center saving");

    std::vector<ChipletRef> kinds;
    for (const char* k : {"A", "B", "C", "D", "E", "F"}) kinds.push_back(make_chiplet(k, {{std::string("m") + k, 160.0, n7}}, 0.1));
    const ScenarioAnalysis f = analyze(fsmc_enumerate(kinds, 4, cat.tech("MCM"), 500000), 4);
    double nre = 0.0, total = 0.0;
    for (const auto& s : f.systems) {
        nre += s.cost.nre_total() * s.quantity;
        total += s.cost.total() * s.quantity;
    }
    v.require(nre / total < kFsmcNreShareMax, "FSMC amortized NRE share");
    v.note("1X +" + fmt("%.3f", increase) + ", 4X package NRE cut " + fmt("%.3f", cut) + ", OCME saving " +
           fmt("%.3f", ocme_saving) + ", FSMC NRE share " + fmt("%.4f", nre / total) + " over " +
           std::to_string(f.systems.size()) + " systems");
}

double ledger_gap(const ScenarioAnalysis& a) {
    double sum = 0.0;
    for (const auto& s : a.systems) sum += s.cost.nre_total() * s.quantity;
    return rel_err(sum, a.ledger.total());
}

bool scaled_by(const CostBreakdown& a, const CostBreakdown& b, double l) {
    const double xs[] = {a.raw_chips, a.chip_defects, a.raw_package, a.package_defects, a.wasted_kgd,
                         a.nre_modules, a.nre_chips, a.nre_packages, a.nre_d2d};
    const double ys[] = {b.raw_chips, b.chip_defects, b.raw_package, b.package_defects, b.wasted_kgd,
                         b.nre_modules, b.nre_chips, b.nre_packages, b.nre_d2d};
    for (std::size_t i = 0; i < std::size(xs); ++i) {
        if (rel_err(xs[i] * l, ys[i]) > kScalingTol) return false;
    }
    return true;
}

void conservation(Verdict& v) {
    const json amd_doc = read_json_file((kExamples / "amd-epyc.json").string());
    const json be_doc = read_json_file((kExamples / "break-even.json").string());
    const json sweep_doc = read_json_file((kExamples / "sweep.json").string());
    std::vector<std::pair<std::string, json>> reuse_docs;
    for (const char* f : {"scms.json", "ocme.json", "fsmc.json"}) reuse_docs.emplace_back(f, read_json_file((kExamples / f).string()));

    double worst = 0.0;
    const Catalog base = default_catalog();
    for (const auto& [name, doc] : reuse_docs) {
        const Document d = load_document(doc, base, name);
        worst = std::max(worst, ledger_gap(analyze(parse_reuse(d).scenario)));
    }
    for (const json* doc : {&amd_doc, &be_doc}) {
        const Document d = load_document(*doc, base);
        ReuseScenario all{"all", d.systems, false, 0.0};
        worst = std::max(worst, ledger_gap(analyze(all)));
        for (const auto& s : d.systems) worst = std::max(worst, ledger_gap(analyze({s.name, {s}, false, 0.0})));
    }
    v.require(worst < kConservationTol, "NRE conservation");

    bool scales = true, decisions = true;
    const Document d0 = load_document(amd_doc, base);
    const Document b0 = load_document(be_doc, base);
    const BreakEvenRequest ber = parse_break_even(b0);
    const auto be0 = break_even_quantity(b0.system(ber.soc, ""), b0.system(ber.multi, ""), ber.min_quantity,
                                         ber.max_quantity);
    const SweepRequest sw0 = parse_sweep(load_document(sweep_doc, base));
    const SweepResult sweep0 = partition_sweep(sw0.module_area, sw0.counts, sw0.techs, sw0.node, sw0.d2d_area_fraction);
    for (double l : kScaleFactors) {
        const Catalog scaled = scale_costs(base, l);
        const Document d1 = load_document(amd_doc, scaled);
        for (std::size_t i = 0; i < d0.systems.size(); ++i) {
            const ScenarioAnalysis a0 = analyze({"one", {d0.systems[i]}, false, 0.0});
            const ScenarioAnalysis a1 = analyze({"one", {d1.systems[i]}, false, 0.0});
            scales = scales && scaled_by(a0.systems[0].cost, a1.systems[0].cost, l);
        }
        for (const auto& pair : parse_compare(d0)) {
            const bool before = re_of(d0, pair.multi).total() < re_of(d0, pair.soc).total();
            const bool after = re_of(d1, pair.multi).total() < re_of(d1, pair.soc).total();
            decisions = decisions && before == after;
        }
        const Document b1 = load_document(be_doc, scaled);
        const auto be1 = break_even_quantity(b1.system(ber.soc, ""), b1.system(ber.multi, ""), ber.min_quantity,
                                             ber.max_quantity);
        decisions = decisions && be1.status == be0.status && std::llabs(be1.quantity - be0.quantity) <= kScanQuantityTol;

        const SweepRequest sw1 = parse_sweep(load_document(sweep_doc, scaled));
        const SweepResult sweep1 =
            partition_sweep(sw1.module_area, sw1.counts, sw1.techs, sw1.node, sw1.d2d_area_fraction);
        auto argmin = [](const SweepResult& s) {
            return std::min_element(s.rows.begin(), s.rows.end(), [](const SweepRow& a, const SweepRow& b) {
                       return a.cost.re_total() < b.cost.re_total();
                   }) - s.rows.begin();
        };
        decisions = decisions && argmin(sweep0) == argmin(sweep1);
        for (std::size_t i = 0; i < sweep0.rows.size(); ++i) {
            decisions = decisions && rel_err(sweep0.rows[i].normalized, sweep1.rows[i].normalized) < kScalingTol;
        }
    }
    v.require(scales, "components scale with costs");
    v.require(decisions, "no decision flips under cost scaling");
    v.note("worst conservation gap " + fmt("%.2e", worst));
}

void determinism(Verdict& v) {
    const struct {
        Command c;
        const char* spec;
    } runs[] = {{Command::Analyze, "amd-epyc.json"}, {Command::Compare, "amd-epyc.json"},
                {Command::Sweep, "sweep.json"},      {Command::Reuse, "scms.json"},
                {Command::Reuse, "ocme.json"},       {Command::Reuse, "fsmc.json"},
                {Command::Curves, "curves.json"},    {Command::BreakEven, "break-even.json"},
                {Command::Compare, "break-even.json"}};
    const fs::path root = fs::temp_directory_path() / "chipcost-acceptance";
    fs::remove_all(root);
    int files = 0;
    bool identical = true;
    for (const auto& r : runs) {
        std::vector<fs::path> dirs;
        for (int jobs : {1, 4}) {
            const fs::path dir = root / (std::string(to_string(r.c)) + "-" + r.spec + "-" + std::to_string(jobs));
            RunManifest m;
            m.command = r.c;
            m.spec_path = (kExamples / r.spec).string();
            m.output_dir = dir.string();
            m.charts = true;
            m.jobs = jobs;
            std::ostringstream log, err;
            if (run(m, log, err) != 0) {
                v.require(false, std::string(r.spec) + ": " + err.str());
                return;
            }
            dirs.push_back(dir);
        }
        for (const auto& e : fs::directory_iterator(dirs[0])) {
            const auto ext = e.path().extension();
            if (ext != ".csv" && ext != ".json") continue;
            ++files;
            identical = identical && slurp(e.path()) == slurp(dirs[1] / e.path().filename());
        }
    }
    fs::remove_all(root);
    v.require(identical && files > 0, "byte-identical CSV/JSON across runs");
    v.note(std::to_string(files) + " files compared");
}

}  // namespace

int main() {
    criterion(1, yield_model, kYieldBudgetMs);
    criterion(2, packing, kPackingBudgetMs);
    criterion(3, degenerations, kDegenerationBudgetMs);
    criterion(4, amd, kAmdBudgetMs);
    criterion(5, thresholds, kThresholdBudgetMs);
    criterion(6, break_even);
    criterion(7, fsmc);
    criterion(8, reuse, kReuseBudgetMs);
    criterion(9, conservation);
    criterion(10, determinism);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures;
}
