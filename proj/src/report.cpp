#include "chipcost/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "chipcost/error.hpp"
#include "chipcost/format.hpp"

namespace chipcost {

using nlohmann::json;

namespace {

const char* kBreakdownHeader =
    "system,raw_chips,chip_defects,raw_package,package_defects,wasted_kgd,"
    "nre_modules,nre_chips,nre_packages,nre_d2d,re_total,total,normalized\n";

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#9c755f"};

std::string row_values(const CostBreakdown& c) {
    std::string out;
    for (double v : {c.raw_chips, c.chip_defects, c.raw_package, c.package_defects, c.wasted_kgd, c.nre_modules,
                     c.nre_chips, c.nre_packages, c.nre_d2d, c.re_total(), c.total()}) {
        out += ',';
        out += format_number(v);
    }
    return out;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

std::string svg_open(double w, double h, const std::string& title) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(w) + "\" height=\"" + fixed(h) +
           "\" font-family=\"sans-serif\" font-size=\"11\">\n<text x=\"10\" y=\"18\" font-size=\"14\">" +
           xml_escape(title) + "</text>\n";
}

}  // namespace

std::string breakdown_csv(const std::vector<BreakdownRow>& rows, double reference) {
    std::string out = kBreakdownHeader;
    for (const auto& r : rows) {
        out += csv_field(r.system);
        out += row_values(r.cost);
        out += ',';
        out += format_number(reference > 0.0 ? r.cost.total() / reference : 0.0);
        out += '\n';
    }
    return out;
}

json breakdown_to_json(const CostBreakdown& c) {
    return {{"raw_chips", c.raw_chips},       {"chip_defects", c.chip_defects}, {"raw_package", c.raw_package},
            {"package_defects", c.package_defects}, {"wasted_kgd", c.wasted_kgd},   {"nre_modules", c.nre_modules},
            {"nre_chips", c.nre_chips},       {"nre_packages", c.nre_packages}, {"nre_d2d", c.nre_d2d},
            {"re_total", c.re_total()},       {"nre_total", c.nre_total()},     {"total", c.total()}};
}

std::string sweep_csv(const SweepResult& sweep) {
    std::string out =
        "chiplet_count,tech,raw_chips,chip_defects,raw_package,package_defects,wasted_kgd,re_total,normalized\n";
    for (const auto& r : sweep.rows) {
        out += std::to_string(r.chiplet_count);
        out += ',';
        out += csv_field(r.tech);
        for (double v : {r.cost.raw_chips, r.cost.chip_defects, r.cost.raw_package, r.cost.package_defects,
                         r.cost.wasted_kgd, r.cost.re_total(), r.normalized}) {
            out += ',';
            out += format_number(v);
        }
        out += '\n';
    }
    return out;
}

json scenario_to_json(const ScenarioAnalysis& a) {
    json systems = json::array();
    for (const auto& s : a.systems) {
        json entry = breakdown_to_json(s.cost);
        entry["system"] = s.name;
        entry["quantity"] = s.quantity;
        entry["normalized"] = s.normalized;
        systems.push_back(std::move(entry));
    }
    return {{"scenario", a.name},
            {"systems", std::move(systems)},
            {"ledger", ledger_to_json(a.ledger)},
            {"total", a.total},
            {"mean_unit_cost", a.mean_unit_cost},
            {"reference_re_total", a.reference},
            {"mean_normalized_cost", a.mean_normalized}};
}

std::string stacked_bar_svg(const std::string& title, const std::vector<std::string>& labels,
                            const std::vector<std::string>& series_names,
                            const std::vector<std::vector<double>>& series) {
    const double bar = 28.0, gap = 14.0, left = 60.0, top = 40.0, plot_h = 300.0;
    const double width = left + labels.size() * (bar + gap) + 180.0;
    const double height = top + plot_h + 90.0;

    double peak = 0.0;
    for (std::size_t j = 0; j < labels.size(); ++j) {
        double sum = 0.0;
        for (const auto& s : series) sum += std::max(0.0, s[j]);
        peak = std::max(peak, sum);
    }
    const double scale = peak > 0.0 ? plot_h / peak : 0.0;

    std::string out = svg_open(width, height, title);
    out += "<line x1=\"" + fixed(left) + "\" y1=\"" + fixed(top + plot_h) + "\" x2=\"" +
           fixed(width - 170.0) + "\" y2=\"" + fixed(top + plot_h) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"5\" y=\"" + fixed(top + 10) + "\">" + xml_escape(format_number(peak)) + "</text>\n";
    for (std::size_t j = 0; j < labels.size(); ++j) {
        const double x = left + gap / 2 + j * (bar + gap);
        double y = top + plot_h;
        for (std::size_t i = 0; i < series.size(); ++i) {
            const double h = std::max(0.0, series[i][j]) * scale;
            y -= h;
            out += "<rect x=\"" + fixed(x) + "\" y=\"" + fixed(y) + "\" width=\"" + fixed(bar) + "\" height=\"" +
                   fixed(h) + "\" fill=\"" + kPalette[i % std::size(kPalette)] + "\"/>\n";
        }
        out += "<text transform=\"translate(" + fixed(x + bar / 2) + "," + fixed(top + plot_h + 8) +
               ") rotate(60)\">" + xml_escape(labels[j]) + "</text>\n";
    }
    for (std::size_t i = 0; i < series_names.size(); ++i) {
        const double y = top + i * 16.0;
        out += "<rect x=\"" + fixed(width - 160) + "\" y=\"" + fixed(y) + "\" width=\"10\" height=\"10\" fill=\"" +
               kPalette[i % std::size(kPalette)] + "\"/>\n";
        out += "<text x=\"" + fixed(width - 145) + "\" y=\"" + fixed(y + 9) + "\">" + xml_escape(series_names[i]) +
               "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string curves_svg(const std::string& title, const std::vector<std::string>& names,
                       const std::vector<std::vector<CurvePoint>>& curves) {
    const double left = 60.0, top = 40.0, plot_w = 480.0, plot_h = 300.0;
    double max_area = 0.0, max_cost = 0.0;
    for (const auto& c : curves) {
        for (const auto& p : c) {
            max_area = std::max(max_area, p.area);
            max_cost = std::max(max_cost, p.normalized_cost);
        }
    }
    std::string out = svg_open(left + plot_w + 160.0, top + plot_h + 40.0, title);
    out += "<rect x=\"" + fixed(left) + "\" y=\"" + fixed(top) + "\" width=\"" + fixed(plot_w) + "\" height=\"" +
           fixed(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const char* color = kPalette[i % std::size(kPalette)];
        std::string yield_pts, cost_pts;
        for (const auto& p : curves[i]) {
            const double x = left + (max_area > 0 ? p.area / max_area : 0) * plot_w;
            yield_pts += fixed(x) + "," + fixed(top + plot_h * (1.0 - p.yield)) + " ";
            cost_pts += fixed(x) + "," + fixed(top + plot_h * (1.0 - (max_cost > 0 ? p.normalized_cost / max_cost : 0))) +
                        " ";
        }
        out += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" points=\"" + yield_pts + "\"/>\n";
        out += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-dasharray=\"4 3\" points=\"" +
               cost_pts + "\"/>\n";
        out += "<text x=\"" + fixed(left + plot_w + 10) + "\" y=\"" + fixed(top + 12 + i * 16.0) + "\" fill=\"" +
               color + "\">" + xml_escape(names[i]) + "</text>\n";
    }
    out += "<text x=\"" + fixed(left) + "\" y=\"" + fixed(top + plot_h + 16) +
           "\">area (mm2); solid: yield, dashed: normalized cost</text>\n";
    out += "</svg>\n";
    return out;
}

std::string breakdown_svg(const std::string& title, const std::vector<BreakdownRow>& rows) {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> series(6);
    for (const auto& r : rows) {
        labels.push_back(r.system);
        series[0].push_back(r.cost.raw_chips);
        series[1].push_back(r.cost.chip_defects);
        series[2].push_back(r.cost.raw_package);
        series[3].push_back(r.cost.package_defects);
        series[4].push_back(r.cost.wasted_kgd);
        series[5].push_back(r.cost.nre_total());
    }
    return stacked_bar_svg(title, labels,
                           {"raw chips", "chip defects", "raw package", "package defects", "wasted KGDs", "NRE"},
                           series);
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot write '" + tmp.string() + "'", path.string());
        out << content;
        out.flush();
        if (!out) throw Error(ErrorCode::IoError, "write to '" + tmp.string() + "' failed", path.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(ErrorCode::IoError, "cannot move output into '" + path.string() + "'", path.string());
    }
}

}  // namespace chipcost
