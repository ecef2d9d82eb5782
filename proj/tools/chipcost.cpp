#include <iostream>

#include <CLI11.hpp>

#include "chipcost/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Chiplet vs monolithic cost model"};
    app.require_subcommand(1);

    chipcost::RunManifest manifest;
    const std::pair<chipcost::Command, const char*> commands[] = {
        {chipcost::Command::Analyze, "Per-unit cost breakdown of every system in the spec"},
        {chipcost::Command::Compare, "SoC vs multi-chip table for the spec's compare pairs"},
        {chipcost::Command::Sweep, "Equal-area partition sweep over chiplet counts and technologies"},
        {chipcost::Command::Reuse, "Analyze an SCMS, OCME, FSMC or custom reuse scenario"},
        {chipcost::Command::Curves, "Yield and normalized cost against die area per node"},
        {chipcost::Command::BreakEven, "Quantity at which the multi-chip system pays back"},
    };
    for (const auto& [command, help] : commands) {
        CLI::App* sub = app.add_subcommand(chipcost::to_string(command), help);
        sub->add_option("--catalog", manifest.catalog_path, "Catalog JSON (default: built-in)")
            ->check(CLI::ExistingFile);
        sub->add_option("--spec", manifest.spec_path, "Spec JSON with modules, chiplets, systems");
        sub->add_option("--out", manifest.output_dir, "Output directory")->capture_default_str();
        sub->add_option("--normalize", manifest.normalize, "Reference system for the normalized column");
        sub->add_flag("--charts", manifest.charts, "Also emit SVG charts");
        sub->add_option("--jobs", manifest.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
        sub->callback([&manifest, command = command] { manifest.command = command; });
    }

    CLI11_PARSE(app, argc, argv);
    return chipcost::run(manifest, std::cout, std::cerr);
}
