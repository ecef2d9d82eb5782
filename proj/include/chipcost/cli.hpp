#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "chipcost/error.hpp"

namespace chipcost {

enum class Command { Analyze, Compare, Sweep, Reuse, Curves, BreakEven };

const char* to_string(Command command);
std::optional<Command> parse_command(const std::string& text);

struct RunManifest {
    Command command = Command::Analyze;
    std::string catalog_path;  ///< empty: built-in default catalog
    std::string spec_path;     ///< optional for curves only
    std::string output_dir = "out";
    std::string normalize;     ///< reference system name; empty picks a per-command default
    bool charts = false;
    int jobs = 1;
};

/// Executes one command and writes its artifacts plus manifest.json into the
/// output directory. Returns 0 on success. On failure prints a JSON error
/// object to `err` and returns 1.
int run(const RunManifest& manifest, std::ostream& log, std::ostream& err);

nlohmann::json error_to_json(const Error& error);

}  // namespace chipcost
