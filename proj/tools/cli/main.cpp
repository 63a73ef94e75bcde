// excidyn: command-line front end for scenario runs, sweeps and verification

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "excidyn/asymptotics.hpp"
#include "excidyn/integrator.hpp"
#include "excidyn/output.hpp"
#include "excidyn/presets.hpp"
#include "excidyn/scenario_io.hpp"
#include "excidyn/sweep.hpp"
#include "excidyn_verify/criteria.hpp"

namespace fs = std::filesystem;
using namespace excidyn;

namespace {

enum Exit : int { ok = 0, check_failed = 1, bad_input = 2, numeric_abort = 3, io_failure = 4 };

int report(const std::string& kind, const std::string& message,
           const std::vector<std::string>& issues = {}, Exit code = bad_input) {
    nlohmann::json err{{"error", kind}, {"message", message}};
    if (!issues.empty()) err["issues"] = issues;
    std::cerr << err.dump() << '\n';
    return code;
}

struct Source {
    std::string preset;
    std::string scenario;
    std::optional<double> hbar;

    void attach(CLI::App* cmd) {
        auto* p = cmd->add_option("--preset", preset, "figure preset name (e.g. fig4)");
        auto* s = cmd->add_option("--scenario", scenario, "scenario JSON file");
        p->excludes(s);
        cmd->add_option("--hbar", hbar, "override hbar (eV fs)");
    }

    Scenario load() const {
        if (!preset.empty()) return excidyn::preset(preset, hbar.value_or(kHbarPhysical));
        if (scenario.empty()) throw ScenarioError({"one of --preset or --scenario is required"});
        Scenario s = load_scenario(scenario);
        if (hbar) {
            s.constants.hbar = *hbar;
            require_valid(s);
        }
        return s;
    }
};

std::vector<double> parse_values(const std::string& list) {
    std::vector<double> out;
    std::stringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw ScenarioError({"not a number in --values: '" + item + "'"});
        out.push_back(v);
    }
    if (out.empty()) throw ScenarioError({"--values is empty"});
    return out;
}

void emit(const std::string& out, const std::string& contents) {
    if (out.empty() || out == "-") {
        std::cout << contents;
    } else {
        write_file_atomic(out, contents);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"excidyn: driven dimer exciton dynamics with phonons and optical noise"};
    app.require_subcommand(1);

    Source run_src;
    std::string run_out;
    auto* run = app.add_subcommand("run", "integrate a scenario and write the trajectory CSV");
    run_src.attach(run);
    run->add_option("--out", run_out, "output CSV")->required();

    std::string preset_name, preset_out;
    bool preset_list = false;
    auto* pre = app.add_subcommand("preset", "write a figure preset as scenario JSON");
    pre->add_option("name", preset_name, "preset name");
    pre->add_option("--out", preset_out, "output JSON (stdout if omitted)");
    pre->add_flag("--list", preset_list, "list preset names");
    double preset_hbar = kHbarPhysical;
    pre->add_option("--hbar", preset_hbar, "hbar used to convert caption energies");

    Source sweep_src;
    std::string sweep_param, sweep_values, sweep_out, sweep_lock = "auto";
    auto* sweep = app.add_subcommand("sweep", "run a one-parameter family in parallel");
    sweep_src.attach(sweep);
    sweep->add_option("--param", sweep_param, "dotted scenario key, e.g. dimer.J")->required();
    sweep->add_option("--values", sweep_values, "comma-separated values")->required();
    sweep->add_option("--out", sweep_out, "output directory")->required();
    sweep->add_option("--lock-detuning", sweep_lock, "keep hbar*delta' = -eps: auto, on or off")
        ->check(CLI::IsMember({"auto", "on", "off"}));

    Source asym_src;
    std::string asym_out;
    auto* asym = app.add_subcommand("asymptote", "long-time coefficients, renormalization and stationary state");
    asym_src.attach(asym);
    asym->add_option("--out", asym_out, "output JSON (stdout if omitted)");

    std::string tier = "fast";
    auto* verify = app.add_subcommand("verify", "run a verification tier and print a pass/fail table");
    verify->add_option("--tier", tier, "fast, oracle, figures or all")
        ->check(CLI::IsMember({"fast", "oracle", "figures", "all"}));

    Source kern_src;
    std::string kern_out;
    auto* kern = app.add_subcommand("dump-phonon", "CSV of the phonon coefficients on the output grid");
    kern_src.attach(kern);
    kern->add_option("--out", kern_out, "output CSV (stdout if omitted)");

    Source field_src;
    std::string field_out;
    auto* field = app.add_subcommand("dump-field", "CSV of drive, noise integrals and noise coefficients");
    field_src.attach(field);
    field->add_option("--out", field_out, "output CSV (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report("usage", e.what());
    }

    try {
        if (*run) {
            emit(run_out, trajectory_csv(integrate(run_src.load())));
        } else if (*pre) {
            if (preset_list || preset_name.empty()) {
                for (const auto& n : preset_names()) std::cout << n << '\n';
            } else {
                emit(preset_out, scenario_to_json(preset(preset_name, preset_hbar)));
            }
        } else if (*sweep) {
            SweepSpec spec{sweep_param, parse_values(sweep_values), std::nullopt};
            if (sweep_lock != "auto") spec.lock_detuning = sweep_lock == "on";
            for (const auto& e : run_sweep(sweep_src.load(), spec, sweep_out)) {
                std::cout << e.file.string() << '\n';
            }
        } else if (*asym) {
            emit(asym_out, asymptote_report(asym_src.load()));
        } else if (*verify) {
            const auto results = verify::run_tier(verify::parse_tier(tier));
            std::cout << verify::format_results(results);
            for (const auto& r : results) {
                if (!r.passed) return check_failed;
            }
        } else if (*kern) {
            emit(kern_out, phonon_dump_csv(kern_src.load()));
        } else if (*field) {
            emit(field_out, field_dump_csv(field_src.load()));
        }
    } catch (const ScenarioError& e) {
        return report("scenario", e.what(), e.issues());
    } catch (const IntegrationError& e) {
        return report("integration", e.what(), {}, numeric_abort);
    } catch (const std::invalid_argument& e) {
        return report("argument", e.what());
    } catch (const std::exception& e) {
        return report("io", e.what(), {}, io_failure);
    }
    return ok;
}
