// sweep.hpp: one-parameter families of runs executed in parallel

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "excidyn/model.hpp"

namespace excidyn {

struct SweepSpec {
    std::string parameter;       // dotted key, e.g. "dimer.J"
    std::vector<double> values;  // nonempty
    // Keep hbar*delta' = -eps after every override. Unset: enabled when the
    // base scenario already satisfies the relation with eps != 0.
    std::optional<bool> lock_detuning;
};

struct SweepEntry {
    double value{0.0};
    std::filesystem::path file;
    Scenario scenario;
};

/// Scenarios of the family, in value order, with locks applied. Throws ScenarioError.
std::vector<Scenario> expand_sweep(const Scenario& base, const SweepSpec& spec);

/// Worker count: EXCIDYN_THREADS if set and positive, else hardware concurrency,
/// never more than `jobs`.
unsigned sweep_threads(std::size_t jobs);

/// Integrates every member and writes <label>_<index>.csv plus manifest.json into `out_dir`.
std::vector<SweepEntry> run_sweep(const Scenario& base, const SweepSpec& spec,
                                  const std::filesystem::path& out_dir);

}  // namespace excidyn
