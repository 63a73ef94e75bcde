// asymptotics.hpp: long-time generator, Debye-Waller renormalization and the stationary state

#pragma once

#include <string>

#include <Eigen/Dense>

#include "excidyn/model.hpp"
#include "excidyn/phonon_kernels.hpp"

namespace excidyn {

/// Limits t - t0 -> infinity of the G1-block coefficients (1/fs).
struct AsymptoticCoefficients {
    double A{0}, B{0}, C{0}, D{0}, E{0}, F{0};
};

AsymptoticCoefficients asymptotic_coefficients(const Scenario& scenario);

struct RenormalizationReport {
    double W{0.0};              // Debye-Waller exponent
    double J_ren{0.0};          // J exp(-2W) (eV)
    double J_minus_hbarB{0.0};  // J - hbar B_as (eV)
};

/// Single-mode Debye-Waller exponent W = |G1 - G2|^2 (2 nB + 1) / (2 (hbar Omega_ph)^2).
RenormalizationReport debye_waller(const Scenario& scenario);

/// 4x4 generator for (rho11, rho22, rho_r, rho_i) once the pulse is gone and the
/// phonon coefficients have settled.
Eigen::Matrix4d longtime_generator(const AsymptoticCoefficients& asym, const DimerParams& dimer,
                                   double hbar);

/// Null direction of a long-time generator (smallest singular value), scaled to rho11 + rho22 = 1.
Eigen::Vector4d stationary_quadruple(const Eigen::Matrix4d& generator);

/// Eigenbasis view of the excited-state block.
struct EigenbasisView {
    double rho_pp{0.0};
    double rho_mm{0.0};
    cplx rho_pm{0.0, 0.0};
};

/// Rotates (rho11, rho22, rho_r, rho_i) onto |+>, |->.
EigenbasisView to_eigenbasis(const Eigen::Vector4d& quad, const DimerParams& dimer);

struct AsymptoticState {
    double gamma1{0.0};  // thermal-weighted resonant coupling sum (1/eV)
    double gamma2{0.0};  // bare resonant coupling sum (1/eV)
    // (-gamma1 Delta + gamma2 eps, -gamma1 Delta - gamma2 eps, J gamma2, 0): second-order shape only
    Eigen::Vector4d shape = Eigen::Vector4d::Zero();
    // shape rescaled to unit excited population
    Eigen::Vector4d normalized = Eigen::Vector4d::Zero();
    EigenbasisView eigenbasis;
};

/// Stationary state with the resonance at hbar*Omega = 2*Delta broadened into
/// the Lorentzian of width gamma_ph implied by the damped-mode kernels.
AsymptoticState asymptotic_state(const Scenario& scenario);

/// beta from nB = 1/(exp(2 beta Delta) - 1); +infinity at nB = 0.
double beta_from_occupation(double nB, double delta);

struct EquilibriumRatio {
    double measured{0.0};   // rho_pp / rho_mm of the supplied state
    double predicted{0.0};  // ((Delta - eps)/(Delta + eps)) exp(-2 beta Delta)
    bool measured_infinite{false};
};

EquilibriumRatio equilibrium_ratio(const Eigen::Vector4d& quad, const DimerParams& dimer,
                                   double beta);

/// JSON report: W, J_ren, the six asymptotic rates, the stationary state and both ratios.
std::string asymptote_report(const Scenario& scenario);

}  // namespace excidyn
