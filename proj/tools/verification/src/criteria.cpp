#include "excidyn_verify/criteria.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "excidyn/asymptotics.hpp"
#include "excidyn/integrator.hpp"
#include "excidyn/phonon_kernels.hpp"
#include "excidyn/presets.hpp"
#include "excidyn_verify/oracles.hpp"

namespace excidyn::verify {

namespace {

using I = StateVector::Index;

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(4);
    s << x;
    return s.str();
}

CheckResult timed(int criterion, std::string name, const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.criterion = criterion;
    r.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// Mean period from linearly interpolated zero crossings of y - mean(y) on [a, b].
double crossing_period(const TrajectoryRecord& rec, const std::function<double(const StateVector&)>& f,
                       double a, double b, int* crossings = nullptr) {
    std::vector<double> t, y;
    for (std::size_t n = 0; n < rec.times.size(); ++n) {
        if (rec.times[n] < a || rec.times[n] > b) continue;
        t.push_back(rec.times[n]);
        y.push_back(f(rec.states[n]));
    }
    if (t.size() < 3) throw std::runtime_error("too few samples for a period estimate");
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(y.size());
    std::vector<double> zeros;
    for (std::size_t n = 1; n < y.size(); ++n) {
        const double u = y[n - 1] - mean;
        const double v = y[n] - mean;
        if ((u < 0.0) != (v < 0.0)) zeros.push_back(t[n - 1] + (t[n] - t[n - 1]) * u / (u - v));
    }
    if (crossings) *crossings = static_cast<int>(zeros.size());
    if (zeros.size() < 3) throw std::runtime_error("fewer than three zero crossings");
    return 2.0 * (zeros.back() - zeros.front()) / static_cast<double>(zeros.size() - 1);
}

// Caption baths spanning the phonon figures, plus variants in J and eps.
std::vector<Scenario> kernel_grid() {
    std::vector<Scenario> out;
    for (const char* name : {"fig2B", "fig2D", "fig5B", "fig5C", "fig7B", "fig7C", "fig8"}) {
        out.push_back(preset(name));
    }
    auto s = preset("fig5C");
    s.bath.nB = 1.5;
    out.push_back(s);
    s = preset("fig7C");
    s.bath.cross = CrossConvention::direct_mirror;
    out.push_back(s);
    s = preset("fig8");
    s.dimer.eps = 0.003;
    s.dimer.J = 0.004;
    out.push_back(s);
    return out;
}

}  // namespace

CheckResult check_kernel_oracles() {
    return timed(1, "kernel oracle equivalence", [](CheckResult& r) {
        int points = 0;
        double worst_g = 0.0;
        for (const auto& s : kernel_grid()) {
            const PhononModel model(s);
            const auto modes = mode_sum_kernels(s.bath, s.constants);
            for (double t : {5.0, 120.0, 700.0, 2000.0, 6000.0}) {
                ++points;
                const auto table = model.gbar_at(t);
                for (int kind = 1; kind <= 3; ++kind) {
                    for (int j = 1; j <= 11; ++j) {
                        const double closed = table[kind - 1][j - 1];
                        const double quad = gbar_quadrature(modes, kind, j, t - s.pulse.t0, model.delta_rate());
                        worst_g = std::max(worst_g, std::abs(closed - quad) / (1.0 + std::abs(quad)));
                    }
                }
            }
        }

        // Noise integrals along propagated runs: accumulators against direct quadrature.
        std::vector<Scenario> noisy;
        noisy.push_back(preset("fig12"));
        auto s = preset("fig12");
        s.dimer.J = 0.002;
        s.dimer.eps = 0.001;
        s.pulse.delta_prime = 0.002;
        s.noise.omega_s = 0.001;
        s.noise.anomalous_ns = 0.05;
        noisy.push_back(s);
        double worst_i = 0.0;
        for (const auto& sc : noisy) {
            const Propagator prop(sc);
            const auto grid = step_schedule(sc);
            ExtendedState x = prop.initial();
            std::size_t next_check = 0;
            const std::vector<double> checks{50.0, 400.0, 999.0, 1000.0, 1200.0, 1600.0};
            for (std::size_t n = 1; n < grid.size() && next_check < checks.size(); ++n) {
                x = prop.step(x, grid[n - 1], grid[n] - grid[n - 1]);
                if (std::abs(grid[n] - checks[next_check]) > 1e-9) continue;
                ++next_check;
                ++points;
                const auto ode = response_integrals(grid[n], sc, x.conv);
                for (bool anomalous : {false, true}) {
                    if (anomalous && sc.noise.anomalous_ns == 0.0) continue;
                    const auto q = response_quadrature(grid[n], sc, anomalous);
                    const auto& o = anomalous ? ode.anomalous : ode.normal;
                    const double scale = std::max({std::abs(q.i1), std::abs(q.i2), std::abs(q.i3),
                                                   std::abs(q.i4), 1e-300});
                    for (auto [a, b] : {std::pair{o.i1, q.i1}, {o.i2, q.i2}, {o.i3, q.i3}, {o.i4, q.i4}}) {
                        worst_i = std::max(worst_i, std::abs(a - b) / scale);
                    }
                }
            }
        }
        r.passed = points >= 50 && worst_g <= 1e-9 && worst_i <= 1e-8;
        r.detail = std::to_string(points) + " points; worst gbar dev " + fmt(worst_g) +
                   " (<= 1e-9 (1+|g|)), worst i dev " + fmt(worst_i) + " (<= 1e-8 rel)";
    });
}

CheckResult check_trace_conservation() {
    return timed(2, "trace conservation", [](CheckResult& r) {
        double worst = 0.0, slowest = 0.0;
        std::string worst_name;
        for (const auto& name : preset_names()) {
            const auto start = std::chrono::steady_clock::now();
            const auto rec = integrate(preset(name));
            slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
            if (rec.max_abs_trace_dev > worst) {
                worst = rec.max_abs_trace_dev;
                worst_name = name;
            }
        }
        r.passed = worst <= 1e-8 && slowest <= 5.0;
        r.detail = std::to_string(preset_names().size()) + " presets; max |tr - 1| = " + fmt(worst) +
                   " (" + worst_name + "), slowest run " + fmt(slowest) + " s";
    });
}

namespace {

Scenario rabi_scenario(double h) {
    Scenario s;
    s.label = "rabi";
    s.dimer.F1 = 0.05;
    s.dimer.J = 1e-12;
    s.pulse.tau1 = 1000.0;
    s.pulse.tau2 = 1.0;
    s.numerics.h = h;
    s.numerics.end_time = 1000.0;
    s.numerics.output_stride = 1;
    return s;
}

double rabi_error(double h) {
    const auto s = rabi_scenario(h);
    const auto rec = integrate(s);
    double err = 0.0;
    for (std::size_t n = 0; n < rec.times.size(); ++n) {
        const double exact = rabi_population(s.dimer.F1, 0.0, s.constants.hbar, rec.times[n] - s.pulse.t0);
        err = std::max(err, std::abs(rec.states[n][I::rho11] - exact));
    }
    return err;
}

}  // namespace

CheckResult check_rabi_oracle() {
    return timed(3, "rabi oracle", [](CheckResult& r) {
        const double coarse = rabi_error(0.05);
        const double fine = rabi_error(0.025);
        const double ratio = coarse / fine;
        r.passed = coarse <= 1e-6 && ratio >= 8.0;
        r.detail = "max |p1 - sin^2(F1 t/hbar)| = " + fmt(coarse) + " at h=0.05, halving ratio " + fmt(ratio);
    });
}

CheckResult check_exchange_period() {
    return timed(4, "exchange period", [](CheckResult& r) {
        auto s = preset("fig3D");
        s.numerics.end_time = 12000.0;
        s.numerics.output_stride = 1;
        const auto rec = integrate(s);
        int zeros = 0;
        const double start = s.pulse.t0 + s.pulse.tau1 + 17.5 * s.pulse.tau2;
        const double period = crossing_period(rec, [](const StateVector& x) { return x[I::rho11]; },
                                              start, s.numerics.end_time, &zeros);
        const double expected = M_PI * s.constants.hbar / level_splitting(s.dimer.eps, s.dimer.J);
        const double rel = std::abs(period / expected - 1.0);
        r.passed = rel <= 0.005;
        r.detail = "period " + fmt(period) + " fs vs pi*hbar/Delta " + fmt(expected) + " fs (" +
                   std::to_string(zeros) + " crossings), rel dev " + fmt(rel);
    });
}

CheckResult check_renormalization() {
    return timed(5, "polaron renormalization", [](CheckResult& r) {
        auto s = preset("fig5C");
        s.numerics.end_time = 30000.0;
        s.numerics.h = 0.1;
        s.numerics.output_stride = 5;
        const auto dw = debye_waller(s);
        const auto rec = integrate(s);
        const double start = s.pulse.t0 + s.pulse.tau1 + 10.0 * s.pulse.tau2;
        const double period = crossing_period(
            rec, [](const StateVector& x) { return x[I::rho11] - x[I::rho22]; }, start, s.numerics.end_time);
        const double j_meas = M_PI * s.constants.hbar / period;
        const double dyn = std::abs(j_meas / dw.J_ren - 1.0);
        const double stat = std::abs(dw.J_minus_hbarB / dw.J_ren - 1.0);
        r.passed = dw.W <= 0.05 && dyn <= 0.05 && stat <= 0.01;
        r.detail = "W = " + fmt(dw.W) + "; measured J " + fmt(j_meas) + " vs J e^-2W " + fmt(dw.J_ren) +
                   " (dev " + fmt(dyn) + " <= 0.05); J - hbar B_as " + fmt(dw.J_minus_hbarB) + " (dev " +
                   fmt(stat) + " <= 0.01)";
    });
}

CheckResult check_figure_checkpoints() {
    return timed(6, "figure checkpoints", [](CheckResult& r) {
        auto s = preset("fig4");
        s.numerics.output_stride = 1;
        s.numerics.end_time = 700.0;
        const auto rec = integrate(s);
        double min_p1 = 1.0, max_p2 = 0.0, max_p0 = 0.0;
        for (std::size_t n = 0; n < rec.times.size(); ++n) {
            const double t = rec.times[n];
            const auto& x = rec.states[n];
            if (t >= 250.0 && t <= 350.0) {
                min_p1 = std::min(min_p1, x[I::rho11]);
                max_p2 = std::max(max_p2, x[I::rho22]);
            }
            if (t >= 550.0 && t <= 650.0) max_p0 = std::max(max_p0, x[I::rho00]);
        }
        const bool fig4 = min_p1 <= 0.02 && max_p2 >= 0.05 && max_p0 >= 0.95;

        std::vector<double> plateau;
        for (const char* name : {"fig2A", "fig2B", "fig2C", "fig2D"}) {
            const auto run = integrate(preset(name));
            double peak = 0.0;
            for (const auto& x : run.states) peak = std::max(peak, x[I::rho11]);
            plateau.push_back(peak);
        }
        const bool fig2 = std::is_sorted(plateau.rbegin(), plateau.rend()) &&
                          std::adjacent_find(plateau.begin(), plateau.end()) == plateau.end();

        r.passed = fig4 && fig2;
        r.detail = "fig4: min p1[250,350] " + fmt(min_p1) + " (<= 0.02), max p2[250,350] " + fmt(max_p2) +
                   " (>= 0.05), max p0[550,650] " + fmt(max_p0) + " (>= 0.95); fig2 peak p1 " +
                   fmt(plateau[0]) + " > " + fmt(plateau[1]) + " > " + fmt(plateau[2]) + " > " +
                   fmt(plateau[3]) + (fig2 ? "" : " (not strictly decreasing)");
    });
}

namespace {

// Largest distance of p0 or p1 from 1/2 over the last 250 fs of the plateau.
double plateau_deviation(const Scenario& base, double* p0_end = nullptr, double* p1_end = nullptr) {
    auto s = base;
    s.numerics.end_time = s.pulse.t0 + s.pulse.tau1;
    s.numerics.output_stride = 1;
    const auto rec = integrate(s);
    double dev = 0.0;
    for (std::size_t n = 0; n < rec.times.size(); ++n) {
        if (rec.times[n] < s.numerics.end_time - 250.0) continue;
        const auto& x = rec.states[n];
        dev = std::max({dev, std::abs(x[I::rho00] - 0.5), std::abs(x[I::rho11] - 0.5)});
    }
    if (p0_end) *p0_end = rec.states.back()[I::rho00];
    if (p1_end) *p1_end = rec.states.back()[I::rho11];
    return dev;
}

}  // namespace

CheckResult check_noise_equilibration() {
    return timed(7, "noise equilibration", [](CheckResult& r) {
        const auto base = preset("fig12");
        double p0 = 0.0, p1 = 0.0;
        plateau_deviation(base, &p0, &p1);
        const bool near = std::abs(p0 - 0.5) <= 0.15 && std::abs(p1 - 0.5) <= 0.15;

        std::vector<double> by_ns, by_gamma;
        for (double ns : {0.05, 0.1, 0.2}) {
            auto s = base;
            s.noise.ns = ns;
            by_ns.push_back(plateau_deviation(s));
        }
        for (double g : {0.02, 0.01, 0.005}) {
            auto s = base;
            s.noise.gamma_s = g;
            by_gamma.push_back(plateau_deviation(s));
        }
        auto strictly_down = [](const std::vector<double>& v) {
            return v[0] > v[1] && v[1] > v[2];
        };
        r.passed = near && strictly_down(by_ns) && strictly_down(by_gamma);
        r.detail = "plateau end p0 " + fmt(p0) + ", p1 " + fmt(p1) + "; deviation vs ns {0.05,0.1,0.2}: " +
                   fmt(by_ns[0]) + ", " + fmt(by_ns[1]) + ", " + fmt(by_ns[2]) +
                   "; vs gamma_s {0.02,0.01,0.005}: " + fmt(by_gamma[0]) + ", " + fmt(by_gamma[1]) + ", " +
                   fmt(by_gamma[2]);
    });
}

namespace {

// Relaxation from a single-site excitation with the resonance hbar*Omega_ph = 2*Delta.
Scenario relaxation_scenario(double nB) {
    Scenario s;
    s.label = "relaxation";
    s.dimer.J = 0.0005;
    s.bath.G = 0.0002;
    s.bath.g1_ratio = {1.0, 0.25};
    s.bath.g2_ratio = {1.0, -0.25};
    s.bath.nB = nB;
    s.bath.omega_ph = 2.0 * s.dimer.J / s.constants.hbar;
    s.bath.gamma_ph = 0.0001 / s.constants.hbar;
    s.pulse.tau1 = 0.0;
    s.initial_state = std::array<double, 9>{1, 0, 0, 0, 0, 0, 0, 0, 0};
    s.numerics.h = 0.5;
    s.numerics.end_time = 80000.0;
    s.numerics.output_stride = 1000;
    return s;
}

Eigen::Vector4d quadruple(const StateVector& x) {
    return {x[I::rho11], x[I::rho22], x[I::rho_r], x[I::rho_i]};
}

}  // namespace

CheckResult check_asymptotics() {
    return timed(8, "asymptotics", [](CheckResult& r) {
        // (a) two code paths for the long-time coefficients
        double worst = 0.0;
        for (const char* name : {"fig5B", "fig5C", "fig7C", "fig8"}) {
            const auto s = preset(name);
            const auto asym = asymptotic_coefficients(s);
            const auto late = phonon_coefficients(s.pulse.t0 + 20.0 / s.bath.gamma_ph, s);
            for (auto [a, b] : {std::pair{asym.A, late.A}, {asym.B, late.B}, {asym.C, late.C},
                                {asym.D, late.D}, {asym.E, late.E}, {asym.F, late.F}}) {
                worst = std::max(worst, std::abs(a - b));
            }
        }
        const bool a_ok = worst <= 1e-6;

        // (b) and (c) from relaxation-only runs
        const auto warm = relaxation_scenario(1.0);
        const auto rec = integrate(warm);
        const double pm0 = std::abs(to_eigenbasis(quadruple(rec.states.front()), warm.dimer).rho_pm);
        const double pm1 = std::abs(to_eigenbasis(quadruple(rec.states.back()), warm.dimer).rho_pm);
        const bool b_ok = pm1 < 1e-3 * pm0;

        const double delta = level_splitting(warm.dimer.eps, warm.dimer.J);
        const auto ratio = equilibrium_ratio(quadruple(rec.states.back()), warm.dimer,
                                             beta_from_occupation(warm.bath.nB, delta));
        const double rel = ratio.measured / ratio.predicted;
        const auto cold_rec = integrate(relaxation_scenario(0.0));
        const auto cold = to_eigenbasis(quadruple(cold_rec.states.back()), warm.dimer);
        const double cold_frac = cold.rho_pp / (cold.rho_pp + cold.rho_mm);
        const bool c_ok = rel >= 0.9 && rel <= 1.1 && cold_frac < 0.02;

        r.passed = a_ok && b_ok && c_ok;
        r.detail = "(a) max |asym - t=20/gamma| " + fmt(worst) + "; (b) |rho+-| " + fmt(pm0) + " -> " +
                   fmt(pm1) + "; (c) ratio measured/predicted " + fmt(rel) + " at nB=1, rho++ fraction " +
                   fmt(cold_frac) + " at nB=0";
    });
}

CheckResult check_positivity() {
    return timed(9, "positivity monitoring", [](CheckResult& r) {
        double worst_weak = 0.0;
        std::string weak_fails;
        double strong = 0.0;
        bool strong_reported = true;
        for (const auto& name : preset_names()) {
            const auto s = preset(name);
            const auto rec = integrate(s);
            if (s.bath.G <= 0.005) {
                worst_weak = std::min(worst_weak, rec.min_eig);
                if (rec.min_eig < -1e-4) weak_fails += " " + name + "(" + fmt(rec.min_eig) + ")";
            } else if (name == "fig2D") {
                strong = rec.min_eig;
                strong_reported = rec.positivity_flagged == (rec.min_eig < -s.numerics.positivity_threshold);
            }
        }
        r.passed = worst_weak >= -1e-4 && strong >= -5e-3 && strong_reported;
        r.detail = "min eig over G <= 0.005 presets " + fmt(worst_weak) + " (>= -1e-4)" +
                   (weak_fails.empty() ? "" : "; below:" + weak_fails) + "; fig2D min eig " + fmt(strong) +
                   " (>= -5e-3)";
    });
}

Tier parse_tier(const std::string& name) {
    if (name == "fast") return Tier::fast;
    if (name == "oracle") return Tier::oracle;
    if (name == "figures") return Tier::figures;
    if (name == "all") return Tier::all;
    throw std::invalid_argument("unknown tier " + name + " (expected fast, oracle, figures or all)");
}

std::vector<CheckResult> run_tier(Tier tier) {
    using Check = CheckResult (*)();
    std::vector<Check> checks;
    switch (tier) {
        case Tier::fast:
            checks = {check_trace_conservation, check_rabi_oracle};
            break;
        case Tier::oracle:
            checks = {check_kernel_oracles, check_rabi_oracle};
            break;
        case Tier::figures:
            checks = {check_exchange_period, check_renormalization, check_figure_checkpoints,
                      check_noise_equilibration, check_asymptotics, check_positivity};
            break;
        case Tier::all:
            checks = {check_kernel_oracles,      check_trace_conservation, check_rabi_oracle,
                      check_exchange_period,     check_renormalization,    check_figure_checkpoints,
                      check_noise_equilibration, check_asymptotics,        check_positivity};
            break;
    }
    std::vector<CheckResult> out;
    for (auto c : checks) out.push_back(c());
    return out;
}

std::string format_results(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.criterion << ' ' << r.name << ": " << r.detail
            << " (" << fmt(r.seconds) << " s)\n";
    }
    return out.str();
}

}  // namespace excidyn::verify
