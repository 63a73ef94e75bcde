#include "excidyn/model.hpp"

#include <cmath>
#include <sstream>

namespace excidyn {

namespace {

std::string join_issues(const std::vector<std::string>& issues) {
    std::ostringstream out;
    out << "invalid scenario: ";
    for (std::size_t i = 0; i < issues.size(); ++i) out << (i ? "; " : "") << issues[i];
    return out.str();
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

ScenarioError::ScenarioError(std::vector<std::string> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

std::vector<std::string> validate(const Scenario& s) {
    std::vector<std::string> issues;
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) issues.push_back(what);
    };

    const auto& d = s.dimer;
    check(finite(d.E) && finite(d.eps) && finite(d.J) && finite(d.F1) && finite(d.F2),
          "dimer: all fields must be finite");
    check(level_splitting(d.eps, d.J) > 0.0, "dimer: degenerate splitting (eps = J = 0)");

    const auto& b = s.bath;
    check(finite(b.G) && b.G >= 0.0, "bath.G must be >= 0");
    check(finite(b.nB) && b.nB >= 0.0, "bath.nB must be >= 0");
    check(finite(b.gamma_ph) && b.gamma_ph >= 0.0, "bath.gamma_ph must be >= 0");
    check(b.G == 0.0 || b.gamma_ph > 0.0, "bath.gamma_ph must be > 0 when bath.G > 0");
    check(finite(b.omega_ph), "bath.omega_ph must be finite");
    check(std::isfinite(b.g1_ratio.real()) && std::isfinite(b.g1_ratio.imag()) &&
              std::isfinite(b.g2_ratio.real()) && std::isfinite(b.g2_ratio.imag()),
          "bath.g1_ratio/g2_ratio must be finite");

    const auto& p = s.pulse;
    check(finite(p.tau1) && p.tau1 >= 0.0, "pulse.tau1 must be >= 0");
    check(finite(p.tau2) && p.tau2 > 0.0, "pulse.tau2 must be > 0");
    check(finite(p.delta_prime) && finite(p.t0), "pulse.delta_prime/t0 must be finite");

    const auto& n = s.noise;
    check(finite(n.ns) && n.ns >= 0.0, "noise.ns must be >= 0");
    check(finite(n.gamma_s) && n.gamma_s >= 0.0, "noise.gamma_s must be >= 0");
    check(finite(n.omega_s) && finite(n.anomalous_ns), "noise.omega_s/anomalous_ns must be finite");

    check(finite(s.constants.hbar) && s.constants.hbar > 0.0, "constants.hbar must be > 0");

    const auto& num = s.numerics;
    check(finite(num.h) && num.h > 0.0, "numerics.h must be > 0");
    check(finite(num.end_time) && num.end_time > p.t0, "numerics.end_time must exceed pulse.t0");
    check(num.output_stride >= 1, "numerics.output_stride must be >= 1");
    check(finite(num.positivity_threshold) && num.positivity_threshold >= 0.0,
          "numerics.positivity_threshold must be >= 0");

    if (s.initial_state) {
        bool ok = true;
        for (double v : *s.initial_state) ok = ok && finite(v);
        check(ok, "initial_state must be finite");
    }
    return issues;
}

void require_valid(const Scenario& s) {
    auto issues = validate(s);
    if (!issues.empty()) throw ScenarioError(std::move(issues));
}

double level_splitting(double eps, double J) { return std::hypot(eps, J); }

Eigen::Matrix2d site_hamiltonian(const DimerParams& d) {
    Eigen::Matrix2d h;
    h << d.E + 2.0 * d.eps, d.J, d.J, d.E;
    return h;
}

Eigensystem eigensystem(const DimerParams& d) {
    const double delta = level_splitting(d.eps, d.J);
    if (!(delta > 0.0)) throw ScenarioError({"degenerate splitting"});

    Eigensystem es;
    es.delta = delta;
    es.e_plus = d.E + d.eps + delta;
    es.e_minus = d.E + d.eps - delta;

    if (d.J == 0.0) {
        // Decoupled sites: the upper level is the molecule with the higher energy.
        const Eigen::Vector2d one(1.0, 0.0), two(0.0, 1.0);
        es.v_plus = d.eps > 0.0 ? one : two;
        es.v_minus = d.eps > 0.0 ? two : one;
        return es;
    }

    // (J, delta -/+ eps) with the cancelling difference rewritten as J^2 / (delta +/- eps).
    const double d_minus = d.eps > 0.0 ? d.J * d.J / (delta + d.eps) : delta - d.eps;
    const double d_plus = d.eps < 0.0 ? d.J * d.J / (delta - d.eps) : delta + d.eps;
    es.v_plus = Eigen::Vector2d(d.J, d_minus).normalized();
    es.v_minus = Eigen::Vector2d(d.J, -d_plus).normalized();
    return es;
}

double bose_occupation(double energy, double kT) {
    if (kT <= 0.0) return 0.0;
    return 1.0 / std::expm1(energy / kT);
}

Eigen::Matrix2cd free_propagator(const DimerParams& dimer, double t, const Constants& constants) {
    const auto es = eigensystem(dimer);
    const cplx phase_plus = std::exp(cplx(0.0, -es.e_plus * t / constants.hbar));
    const cplx phase_minus = std::exp(cplx(0.0, -es.e_minus * t / constants.hbar));
    const Eigen::Matrix2cd proj_plus = (es.v_plus * es.v_plus.transpose()).cast<cplx>();
    const Eigen::Matrix2cd proj_minus = (es.v_minus * es.v_minus.transpose()).cast<cplx>();
    return phase_plus * proj_plus + phase_minus * proj_minus;
}

}  // namespace excidyn
