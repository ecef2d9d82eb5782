#include "chipcost/cli.hpp"

#include <filesystem>
#include <map>

#include "chipcost/catalog.hpp"
#include "chipcost/document.hpp"
#include "chipcost/explorer.hpp"
#include "chipcost/format.hpp"
#include "chipcost/nre_cost.hpp"
#include "chipcost/re_cost.hpp"
#include "chipcost/report.hpp"
#include "chipcost/reuse.hpp"

namespace chipcost {

using nlohmann::json;
namespace fs = std::filesystem;

const char* to_string(Command command) {
    switch (command) {
        case Command::Analyze: return "analyze";
        case Command::Compare: return "compare";
        case Command::Sweep: return "sweep";
        case Command::Reuse: return "reuse";
        case Command::Curves: return "curves";
        case Command::BreakEven: return "break-even";
    }
    return "unknown";
}

std::optional<Command> parse_command(const std::string& text) {
    for (auto c : {Command::Analyze, Command::Compare, Command::Sweep, Command::Reuse, Command::Curves,
                   Command::BreakEven}) {
        if (text == to_string(c)) return c;
    }
    return std::nullopt;
}

json error_to_json(const Error& e) {
    json body = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (!e.path().empty()) body["path"] = e.path();
    return {{"error", body}};
}

namespace {

class Outputs {
public:
    Outputs(fs::path dir, std::ostream& log) : dir_(std::move(dir)), log_(log) {}

    void write(const std::string& name, const std::string& content) {
        write_atomic(dir_ / name, content);
        files_.push_back(name);
        log_ << "wrote " << (dir_ / name).string() << '\n';
    }
    void write(const std::string& name, const json& content) { write(name, content.dump(2) + "\n"); }

    const std::vector<std::string>& files() const { return files_; }

private:
    fs::path dir_;
    std::ostream& log_;
    std::vector<std::string> files_;
};

// Total of the --normalize system among `rows`, or `fallback` when no
// reference was requested.
double reference_total(const RunManifest& m, const std::vector<BreakdownRow>& rows, double fallback) {
    if (m.normalize.empty()) return fallback;
    for (const auto& r : rows) {
        if (r.system == m.normalize) return r.cost.total();
    }
    throw Error(ErrorCode::UnknownReference, "normalization system '" + m.normalize + "' is not in the results",
                "--normalize");
}

// RE plus NRE of a system produced on its own.
CostBreakdown standalone_cost(const SystemSpec& s) {
    const SystemSpec group[] = {s};
    const NreLedger ledger = group_nre(group);
    const NreShare share = amortize(ledger, group).front();
    CostBreakdown b = system_re_cost(s);
    b.nre_modules = share.nre_modules;
    b.nre_chips = share.nre_chips;
    b.nre_packages = share.nre_packages;
    b.nre_d2d = share.nre_d2d;
    return b;
}

std::vector<BreakdownRow> rows_of(const ScenarioAnalysis& a) {
    std::vector<BreakdownRow> rows;
    for (const auto& s : a.systems) rows.push_back({s.name, s.cost});
    return rows;
}

void cmd_analyze(const RunManifest& m, const Document& doc, Outputs& out) {
    if (doc.systems.empty()) throw Error(ErrorCode::EmptySystem, "the spec defines no systems", "systems");
    std::vector<BreakdownRow> rows;
    json systems = json::array();
    for (const auto& s : doc.systems) {
        const CostBreakdown b = standalone_cost(s);
        rows.push_back({s.name, b});
        const SystemSpec group[] = {s};
        json entry = breakdown_to_json(b);
        entry["system"] = s.name;
        entry["tech"] = s.tech->name;
        entry["quantity"] = s.quantity;
        entry["package_area_mm2"] = s.package_area;
        entry["ledger"] = ledger_to_json(group_nre(group));
        systems.push_back(std::move(entry));
    }
    const double ref = reference_total(m, rows, rows.front().cost.total());
    out.write("breakdown.csv", breakdown_csv(rows, ref));
    out.write("breakdown.json", json{{"reference_total", ref}, {"systems", std::move(systems)}});
    if (m.charts) out.write("breakdown.svg", breakdown_svg("Unit cost breakdown", rows));
}

void cmd_compare(const RunManifest& m, const Document& doc, Outputs& out) {
    const auto pairs = parse_compare(doc);
    std::vector<BreakdownRow> rows;
    json table = json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const SystemSpec& soc = doc.system(pairs[i].soc, "compare");
        const SystemSpec& multi = doc.system(pairs[i].multi, "compare");
        const CostBreakdown a = standalone_cost(soc);
        const CostBreakdown b = standalone_cost(multi);
        rows.push_back({soc.name, a});
        rows.push_back({multi.name, b});
        table.push_back({{"soc", soc.name},
                         {"multi", multi.name},
                         {"die_cost_saving", 1.0 - b.chips() / a.chips()},
                         {"re_saving", 1.0 - b.re_total() / a.re_total()},
                         {"total_saving", 1.0 - b.total() / a.total()},
                         {"multi_packaging_share", b.packaging() / b.re_total()},
                         {"multi_integration_overhead", integration_overhead_share(multi)}});
    }
    const double ref = reference_total(m, rows, rows.front().cost.total());
    out.write("compare.csv", breakdown_csv(rows, ref));
    out.write("compare.json", json{{"reference_total", ref}, {"pairs", std::move(table)}});
    if (m.charts) out.write("compare.svg", breakdown_svg("SoC vs multi-chip", rows));
}

void cmd_sweep(const RunManifest& m, const Document& doc, Outputs& out) {
    const SweepRequest req = parse_sweep(doc);
    const SweepResult sweep = partition_sweep(req.module_area, req.counts, req.techs, req.node,
                                              req.d2d_area_fraction, m.jobs);
    out.write("sweep.csv", sweep_csv(sweep));
    if (m.charts) {
        std::vector<BreakdownRow> rows;
        for (const auto& r : sweep.rows) rows.push_back({std::to_string(r.chiplet_count) + " " + r.tech, r.cost});
        out.write("sweep.svg", breakdown_svg("Partition sweep, " + format_number(req.module_area) + " mm2 at " +
                                                 sweep.node,
                                             rows));
    }
}

void cmd_reuse(const RunManifest& m, const Document& doc, Outputs& out) {
    const ReuseRequest req = parse_reuse(doc);
    const ScenarioAnalysis a = analyze(req.scenario, m.jobs);
    const auto rows = rows_of(a);
    const double ref = reference_total(m, rows, a.reference);
    json summary = scenario_to_json(a);
    summary["package_reuse"] = req.scenario.package_reuse;
    summary["shared_package_area_mm2"] = req.scenario.shared_package_area;
    out.write("systems.csv", breakdown_csv(rows, ref));
    if (req.soc_tech) {
        const ScenarioAnalysis soc = analyze_as_soc(req.scenario, req.soc_tech, m.jobs);
        out.write("soc_systems.csv", breakdown_csv(rows_of(soc), ref));
        summary["soc_equivalent"] = scenario_to_json(soc);
    }
    out.write("scenario.json", summary);
    if (m.charts) out.write("systems.svg", breakdown_svg("Reuse scenario " + a.name, rows));
}

void cmd_curves(const RunManifest& m, const Document& doc, Outputs& out) {
    const CurvesRequest req = parse_curves(doc);
    std::vector<std::string> names;
    std::vector<std::vector<CurvePoint>> curves;
    for (const auto& node : req.nodes) {
        curves.push_back(cost_yield_curve(*node, req.area_min, req.area_max, req.step));
        names.push_back(node->name);
        out.write("curve_" + node->name + ".csv", curve_csv(curves.back()));
    }
    if (m.charts) out.write("curves.svg", curves_svg("Yield and normalized cost vs area", names, curves));
}

void cmd_break_even(const RunManifest&, const Document& doc, Outputs& out) {
    const BreakEvenRequest req = parse_break_even(doc);
    const SystemSpec& soc = doc.system(req.soc, "break_even.soc");
    const SystemSpec& multi = doc.system(req.multi, "break_even.multi");
    const BreakEvenResult r = break_even_quantity(soc, multi, req.min_quantity, req.max_quantity);
    json body = {{"soc", soc.name},
                 {"multi", multi.name},
                 {"status", to_string(r.status)},
                 {"re_delta_per_unit", r.re_delta},
                 {"nre_delta", r.nre_delta},
                 {"search_range", {req.min_quantity, req.max_quantity}}};
    body["quantity"] = r.status == BreakEvenStatus::Found ? json(r.quantity) : json(nullptr);
    out.write("break_even.json", body);
}

}  // namespace

int run(const RunManifest& m, std::ostream& log, std::ostream& err) {
    try {
        if (m.jobs < 1) throw Error(ErrorCode::InvalidArgument, "--jobs must be >= 1", "--jobs");
        Catalog base = m.catalog_path.empty() ? default_catalog() : load_catalog_file(m.catalog_path);

        json spec_doc;
        if (!m.spec_path.empty()) {
            spec_doc = read_json_file(m.spec_path);
        } else if (m.command != Command::Curves) {
            throw Error(ErrorCode::InvalidArgument,
                        std::string("the ") + to_string(m.command) + " command needs --spec", "--spec");
        }
        const Document doc = spec_doc.is_null() ? Document{base, {}, {}, {}, json::object()}
                                                : load_document(spec_doc, base, m.spec_path);

        const fs::path dir(m.output_dir);
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw Error(ErrorCode::IoError, "cannot create output directory '" + m.output_dir + "'", "--out");
        Outputs out(dir, log);

        switch (m.command) {
            case Command::Analyze: cmd_analyze(m, doc, out); break;
            case Command::Compare: cmd_compare(m, doc, out); break;
            case Command::Sweep: cmd_sweep(m, doc, out); break;
            case Command::Reuse: cmd_reuse(m, doc, out); break;
            case Command::Curves: cmd_curves(m, doc, out); break;
            case Command::BreakEven: cmd_break_even(m, doc, out); break;
        }

        json manifest = {{"command", to_string(m.command)},
                         {"spec", m.spec_path.empty() ? json(nullptr) : json(m.spec_path)},
                         {"catalog", m.catalog_path.empty() ? json("built-in default") : json(m.catalog_path)},
                         {"normalize", m.normalize.empty() ? json(nullptr) : json(m.normalize)},
                         {"charts", m.charts},
                         {"outputs", out.files()},
                         {"resolved_catalog", catalog_to_json(doc.catalog)},
                         {"provenance", provenance_to_json(doc.catalog.provenance)}};
        out.write("manifest.json", manifest);
        return 0;
    } catch (const Error& e) {
        err << error_to_json(e).dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << json{{"error", {{"code", "InternalError"}, {"message", e.what()}}}}.dump() << '\n';
        return 1;
    }
}

}  // namespace chipcost
