// scenario_io.hpp: scenario files, dotted-key overrides and atomic writes

#pragma once

#include <filesystem>
#include <string>

#include "excidyn/model.hpp"

namespace excidyn {

/// Pretty-printed JSON document; keys mirror the Scenario field names.
/// Complex ratios are written as [re, im], the cross convention as its enum name.
std::string scenario_to_json(const Scenario& scenario);

/// Parses and validates. Unknown keys, missing required keys, type errors and
/// invariant violations are all collected into one ScenarioError.
Scenario scenario_from_json(const std::string& text);

Scenario load_scenario(const std::filesystem::path& path);

void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

/// Copy of `scenario` with the numeric field at `dotted` (e.g. "dimer.J") set to `value`.
/// Throws ScenarioError when the key does not name a numeric field.
Scenario with_parameter(const Scenario& scenario, const std::string& dotted, double value);

/// Writes `contents` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace excidyn
