#include "excidyn/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <json.hpp>

namespace excidyn {

AsymptoticCoefficients asymptotic_coefficients(const Scenario& scenario) {
    const auto p = PhononModel(scenario).asymptotic();
    return {p.A, p.B, p.C, p.D, p.E, p.F};
}

RenormalizationReport debye_waller(const Scenario& scenario) {
    const auto& b = scenario.bath;
    if (!(b.omega_ph > 0.0)) throw std::invalid_argument("debye_waller requires omega_ph > 0");
    const double hbar_omega = scenario.constants.hbar * b.omega_ph;
    const double coupling = std::norm(b.g1_ratio - b.g2_ratio) * b.G * b.G;

    RenormalizationReport r;
    r.W = coupling * (2.0 * b.nB + 1.0) / (2.0 * hbar_omega * hbar_omega);
    r.J_ren = scenario.dimer.J * std::exp(-2.0 * r.W);
    r.J_minus_hbarB = scenario.dimer.J - scenario.constants.hbar * asymptotic_coefficients(scenario).B;
    return r;
}

Eigen::Matrix4d longtime_generator(const AsymptoticCoefficients& a, const DimerParams& d,
                                   double hbar) {
    const double J = d.J / hbar;
    const double e = d.eps / hbar;
    Eigen::Matrix4d free, damping;
    free << 0, 0, 0, -2 * J,
            0, 0, 0, 2 * J,
            0, 0, 0, 2 * e,
            J, -J, -2 * e, 0;
    damping << 0, 0, 0, 0,
               0, 0, 0, 0,
               a.A, a.C, a.E, -a.F,
               a.B, -a.D, a.F, a.E;
    return free - damping;
}

Eigen::Vector4d stationary_quadruple(const Eigen::Matrix4d& generator) {
    Eigen::JacobiSVD<Eigen::Matrix4d> svd(generator, Eigen::ComputeFullV);
    Eigen::Vector4d v = svd.matrixV().col(3);
    const double population = v[0] + v[1];
    if (population == 0.0) return Eigen::Vector4d::Zero();
    return v / population;
}

EigenbasisView to_eigenbasis(const Eigen::Vector4d& q, const DimerParams& dimer) {
    const auto es = eigensystem(dimer);
    Eigen::Matrix2cd rho;
    rho << q[0], cplx(q[2], q[3]), cplx(q[2], -q[3]), q[1];
    const Eigen::Vector2cd plus = es.v_plus.cast<cplx>();
    const Eigen::Vector2cd minus = es.v_minus.cast<cplx>();
    EigenbasisView v;
    v.rho_pp = (plus.adjoint() * rho * plus)(0, 0).real();
    v.rho_mm = (minus.adjoint() * rho * minus)(0, 0).real();
    v.rho_pm = (plus.adjoint() * rho * minus)(0, 0);
    return v;
}

AsymptoticState asymptotic_state(const Scenario& scenario) {
    const auto& b = scenario.bath;
    const auto& d = scenario.dimer;
    const double hbar = scenario.constants.hbar;
    const double delta = level_splitting(d.eps, d.J);
    if (!(b.gamma_ph > 0.0)) throw std::invalid_argument("asymptotic_state requires gamma_ph > 0");

    // delta(hbar Omega - 2 Delta) -> Lorentzian of half-width gamma_ph centred at Omega_ph.
    const double w = 2.0 * delta / hbar;
    const double detune = w - b.omega_ph;
    const double lorentz = b.gamma_ph / (std::numbers::pi * (detune * detune + b.gamma_ph * b.gamma_ph));
    const double coupling = std::norm(b.g1_ratio - b.g2_ratio) * b.G * b.G;

    AsymptoticState st;
    st.gamma2 = coupling / (4.0 * delta * delta) * lorentz / hbar;
    st.gamma1 = (2.0 * b.nB + 1.0) * st.gamma2;
    st.shape << -st.gamma1 * delta + st.gamma2 * d.eps, -st.gamma1 * delta - st.gamma2 * d.eps,
        d.J * st.gamma2, 0.0;
    const double population = st.shape[0] + st.shape[1];
    if (population != 0.0) st.normalized = st.shape / population;
    st.eigenbasis = to_eigenbasis(st.normalized, d);
    return st;
}

double beta_from_occupation(double nB, double delta) {
    if (nB <= 0.0) return std::numeric_limits<double>::infinity();
    return std::log1p(1.0 / nB) / (2.0 * delta);
}

EquilibriumRatio equilibrium_ratio(const Eigen::Vector4d& quad, const DimerParams& dimer,
                                   double beta) {
    const double delta = level_splitting(dimer.eps, dimer.J);
    const auto v = to_eigenbasis(quad, dimer);

    EquilibriumRatio r;
    const double boltzmann = std::isinf(beta) ? 0.0 : std::exp(-2.0 * beta * delta);
    r.predicted = (delta - dimer.eps) / (delta + dimer.eps) * boltzmann;
    if (std::abs(v.rho_mm) <= 1e-300) {
        r.measured_infinite = true;
        r.measured = std::numeric_limits<double>::infinity();
    } else {
        r.measured = v.rho_pp / v.rho_mm;
    }
    return r;
}

std::string asymptote_report(const Scenario& scenario) {
    const auto& d = scenario.dimer;
    const double hbar = scenario.constants.hbar;
    const auto asym = asymptotic_coefficients(scenario);
    const auto dw = debye_waller(scenario);
    const auto state = asymptotic_state(scenario);
    const double delta = level_splitting(d.eps, d.J);
    const double beta = beta_from_occupation(scenario.bath.nB, delta);
    const Eigen::Vector4d null_state = stationary_quadruple(longtime_generator(asym, d, hbar));
    const auto ratio = equilibrium_ratio(null_state, d, beta);

    auto quad = [](const Eigen::Vector4d& q) {
        return nlohmann::json{{"rho11", q[0]}, {"rho22", q[1]}, {"rho_r", q[2]}, {"rho_i", q[3]}};
    };
    auto finite_or_null = [](double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(); };

    nlohmann::json doc;
    doc["label"] = scenario.label;
    doc["W"] = dw.W;
    doc["J_ren"] = dw.J_ren;
    doc["J_minus_hbarB_as"] = dw.J_minus_hbarB;
    doc["A_as"] = asym.A;
    doc["B_as"] = asym.B;
    doc["C_as"] = asym.C;
    doc["D_as"] = asym.D;
    doc["E_as"] = asym.E;
    doc["F_as"] = asym.F;
    doc["stationary_state"] = {
        {"gamma1", state.gamma1},
        {"gamma2", state.gamma2},
        {"shape", quad(state.shape)},
        {"normalized", quad(state.normalized)},
        {"eigenbasis",
         {{"rho_pp", state.eigenbasis.rho_pp},
          {"rho_mm", state.eigenbasis.rho_mm},
          {"rho_pm", {state.eigenbasis.rho_pm.real(), state.eigenbasis.rho_pm.imag()}}}}};
    doc["null_space_state"] = quad(null_state);
    doc["beta"] = finite_or_null(beta);
    doc["ratio_measured"] = finite_or_null(ratio.measured);
    doc["ratio_measured_infinite"] = ratio.measured_infinite;
    doc["ratio_predicted"] = ratio.predicted;
    return doc.dump(2) + "\n";
}

}  // namespace excidyn
