// criteria.hpp: acceptance checks shared by the test binaries and `excidyn verify`

#pragma once

#include <string>
#include <vector>

namespace excidyn::verify {

struct CheckResult {
    int criterion{0};
    std::string name;
    bool passed{false};
    std::string detail;
    double seconds{0.0};
};

CheckResult check_kernel_oracles();      // 1
CheckResult check_trace_conservation();  // 2
CheckResult check_rabi_oracle();         // 3
CheckResult check_exchange_period();     // 4
CheckResult check_renormalization();     // 5
CheckResult check_figure_checkpoints();  // 6
CheckResult check_noise_equilibration(); // 7
CheckResult check_asymptotics();         // 8
CheckResult check_positivity();          // 9

enum class Tier { fast, oracle, figures, all };

Tier parse_tier(const std::string& name);

/// Runs the checks belonging to `tier` in criterion order.
std::vector<CheckResult> run_tier(Tier tier);

/// One line per result: "[PASS] 3 rabi oracle: ... (0.41 s)".
std::string format_results(const std::vector<CheckResult>& results);

}  // namespace excidyn::verify
