// oracles.hpp: independent reference computations used by the verification suites

#pragma once

#include <array>
#include <cstddef>

#include <Eigen/Dense>

#include "excidyn/field_kernels.hpp"
#include "excidyn/generator.hpp"
#include "excidyn/model.hpp"

namespace excidyn::verify {

/// Kernels rebuilt from an explicit finite set of modes.
///
/// Modes k = 0..N-1 all sit at Omega_ph; the first half carries
/// hbar Omega G^i_k = G_i, the mirror half carries G_i* (or G_i again for the
/// direct convention). Products are summed mode by mode, exactly as the
/// kernel sums are written, and the remaining frequency sum becomes the
/// damped cosine or sine.
struct ModeSumKernels {
    std::array<double, 11> weight{};  // (1/N) sum_k Omega_k^2 (coupling product) / G^2, times (2nB+1) where due
    std::array<bool, 11> sine{};
    double omega_ph{0.0};
    double gamma_ph{0.0};

    double value(int j, double tau) const;
};

ModeSumKernels mode_sum_kernels(const BathParams& bath, const Constants& constants,
                                std::size_t modes = 10000);

/// Adaptive Gauss-Kronrod integral of g_j(tau) times the kind weight over [0, T].
double gbar_quadrature(const ModeSumKernels& kernels, int kind, int j, double T,
                       double delta_rate);

/// i1..i4 (or their anomalous counterparts) by direct quadrature of the correlation
/// function over [t0, t].
ResponseIntegrals response_quadrature(double t, const Scenario& scenario, bool anomalous = false);

/// Debye-Waller exponent summed mode by mode: (1/2N) sum_k |G1_k - G2_k|^2 (2nB + 1).
double debye_waller_mode_sum(const BathParams& bath, const Constants& constants,
                             std::size_t modes = 10000);

/// Resonantly or off-resonantly driven two-level system starting in |0>:
/// p1(T) = F^2/(F^2 + (hbar d/2)^2) sin^2(sqrt(F^2 + (hbar d/2)^2) T / hbar).
double rabi_population(double F, double detuning, double hbar, double T);

/// Exact state of the phononless, noiseless dimer under a constant envelope,
/// by diagonalizing the rotating-frame Hamiltonian. Returned in the
/// integrator's representation (rho_0j in the frame rotating at (E+eps)/hbar).
Vec9 driven_dimer_exact(const Scenario& scenario, double t);

/// Eigenpairs of the site Hamiltonian by a generic symmetric eigensolver.
struct NumericEigen {
    Eigen::Vector2d values;   // ascending
    Eigen::Matrix2d vectors;  // columns
};
NumericEigen numeric_eigensystem(const DimerParams& dimer);

}  // namespace excidyn::verify
