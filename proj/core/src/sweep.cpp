#include "excidyn/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "excidyn/integrator.hpp"
#include "excidyn/output.hpp"
#include "excidyn/scenario_io.hpp"

namespace excidyn {

namespace {

bool detuning_locked(const Scenario& s) {
    if (s.dimer.eps == 0.0) return false;
    const double target = -s.dimer.eps / s.constants.hbar;
    return std::abs(s.pulse.delta_prime - target) <= 1e-12 * std::abs(target);
}

std::string file_stem(const Scenario& base) {
    std::string stem = base.label.empty() ? "run" : base.label;
    for (auto& ch : stem) {
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '_') ch = '_';
    }
    return stem;
}

}  // namespace

std::vector<Scenario> expand_sweep(const Scenario& base, const SweepSpec& spec) {
    if (spec.values.empty()) throw ScenarioError({"sweep value list is empty"});
    const bool lock = spec.lock_detuning.value_or(detuning_locked(base));
    std::vector<Scenario> out;
    out.reserve(spec.values.size());
    for (double v : spec.values) {
        Scenario s = with_parameter(base, spec.parameter, v);
        if (lock) s.pulse.delta_prime = -s.dimer.eps / s.constants.hbar;
        out.push_back(std::move(s));
    }
    return out;
}

unsigned sweep_threads(std::size_t jobs) {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("EXCIDYN_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0) n = static_cast<unsigned>(cap);
    }
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

std::vector<SweepEntry> run_sweep(const Scenario& base, const SweepSpec& spec,
                                  const std::filesystem::path& out_dir) {
    const auto family = expand_sweep(base, spec);
    std::filesystem::create_directories(out_dir);

    const std::string stem = file_stem(base);
    std::vector<SweepEntry> entries(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        entries[i].value = spec.values[i];
        entries[i].scenario = family[i];
        entries[i].file = out_dir / (stem + "_" + std::to_string(i) + ".csv");
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) {
            try {
                write_file_atomic(entries[i].file, trajectory_csv(integrate(entries[i].scenario)));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned n = sweep_threads(entries.size());
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    nlohmann::json manifest;
    manifest["parameter"] = spec.parameter;
    manifest["base"] = nlohmann::json::parse(scenario_to_json(base));
    for (const auto& e : entries) {
        manifest["runs"].push_back({{"value", e.value},
                                    {"file", e.file.filename().string()},
                                    {"delta_prime", e.scenario.pulse.delta_prime}});
    }
    write_file_atomic(out_dir / "manifest.json", manifest.dump(2) + "\n");
    return entries;
}

}  // namespace excidyn
