// phonon_kernels.hpp: single-damped-mode phonon kernels and the G-matrix coefficients

#pragma once

#include <array>

#include "excidyn/model.hpp"

namespace excidyn {

/// The eleven reduced phonon kernels g_j(tau) = Re[c_j * exp((i*Omega_ph - gamma_ph) * tau)].
///
/// Cosine-family kernels (1, 4-7) have real c_j; sine-family kernels (2, 3, 8-11)
/// have purely imaginary c_j = -i * amplitude. Units are 1/(eV^2 fs^2) so that
/// G^2 * integral(g_j) is a rate.
struct KernelConstants {
    std::array<cplx, 11> c{};
    double omega_ph{0.0};
    double gamma_ph{0.0};

    /// Complex decay rate lambda = gamma_ph - i*Omega_ph.
    cplx lambda() const { return {gamma_ph, -omega_ph}; }

    /// g_j(tau) for j in 1..11.
    double value(int j, double tau) const;
};

KernelConstants reduce_kernels(const BathParams& bath, const Constants& constants);

/// Integral over [0, T] of exp(-lambda * tau). Re(lambda) >= 0.
cplx damped_trig_integral(cplx lambda, double T);

/// The three weighted primitives shared by every kernel:
/// integrals of exp(-lambda tau) times 1, sin^2(delta' tau), sin(2 delta' tau).
struct GbarWeights {
    cplx plain;
    cplx sin_squared;
    cplx sin_double;
};

GbarWeights gbar_weights(cplx lambda, double T, double delta_rate);

/// Same weights in the limit T -> infinity (requires Re(lambda) > 0).
GbarWeights gbar_weights_limit(cplx lambda, double delta_rate);

/// gbar[kind-1][j-1] for kind 1..3 and j 1..11.
using GbarTable = std::array<std::array<double, 11>, 3>;

GbarTable gbar_table(const KernelConstants& k, const GbarWeights& w);

/// Single ḡ value: kind in {1,2,3}, j in 1..11, elapsed time T = t - t0, delta_rate = Delta/hbar.
double gbar(const KernelConstants& k, int kind, int j, double T, double delta_rate);

struct PhononCoefficients {
    double A{0}, B{0}, C{0}, D{0}, E{0}, F{0};
    double A1{0}, B1{0}, A2{0}, B2{0}, C1{0}, D1{0}, C2{0}, D2{0};
};

/// Coefficients assembled from a ḡ table. `G` in eV.
PhononCoefficients assemble_phonon_coefficients(const GbarTable& g, const DimerParams& dimer,
                                                double G);

/// Precomputed phonon model for repeated evaluation along a trajectory.
class PhononModel {
public:
    explicit PhononModel(const Scenario& scenario);

    PhononCoefficients at(double t) const;
    GbarTable gbar_at(double t) const;
    PhononCoefficients asymptotic() const;

    const KernelConstants& kernels() const { return kernels_; }
    double delta_rate() const { return delta_rate_; }

private:
    KernelConstants kernels_;
    DimerParams dimer_;
    double G_;
    double t0_;
    double delta_rate_;
};

PhononCoefficients phonon_coefficients(double t, const Scenario& scenario);

}  // namespace excidyn
