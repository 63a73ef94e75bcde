// field_kernels.hpp: pulse envelope, coherent drive and optical-noise coefficients

#pragma once

#include "excidyn/model.hpp"

namespace excidyn {

/// Normalized real envelope: 0 before t0, 1 on the plateau [t0, t0+tau1],
/// exp(-(t - t0 - tau1)/tau2) afterwards.
double envelope(double t, const PulseParams& pulse);

struct CoherentDriveCoeffs {
    double K1{0}, K2{0}, L1{0}, L2{0};  // 1/fs
};

CoherentDriveCoeffs coherent_drive(double t, const Scenario& scenario);

/// Normalized photon correlation with the carrier removed:
/// A(t) A(tau) ns exp(-i omega_s (t - tau)) exp(-gamma_s |t - tau|).
cplx noise_correlation(double t, double tau, const Scenario& scenario);

/// Exponential-kernel convolutions of the envelope,
/// z_pm(t) = integral_{t0}^{t} A(tau) exp(-lambda_pm (t - tau)) dtau with
/// lambda_pm = gamma_s - i(delta' - omega_s) -/+ i Delta'.
/// Each obeys dz/dt = -lambda z + A(t), z(t0) = 0.
struct ConvolutionState {
    cplx z_plus{0.0, 0.0};
    cplx z_minus{0.0, 0.0};
};

struct ConvolutionRates {
    cplx lambda_plus;
    cplx lambda_minus;
};

ConvolutionRates convolution_rates(const Scenario& scenario);

/// Time derivative of the accumulators at t.
ConvolutionState convolution_derivative(const ConvolutionState& z, double t,
                                        const ConvolutionRates& rates, const PulseParams& pulse);

/// Response integrals i1..i4 of the exciton subsystem to the noise (fs).
/// The carrier-frequency prefactor is absorbed: they enter the noise
/// coefficients multiplied by F_i F_j / hbar^2.
struct ResponseIntegrals {
    double i1{0}, i2{0}, i3{0}, i4{0};
};

/// Normal (i) and anomalous (tilde i) response integrals from advanced accumulators.
struct ResponseSet {
    ResponseIntegrals normal;
    ResponseIntegrals anomalous;
};

ResponseSet response_integrals(double t, const Scenario& scenario, const ConvolutionState& conv);

/// One family of eight noise coefficients (1/fs).
struct NoiseFamily {
    double M1{0}, M2{0}, N1{0}, N2{0}, O1{0}, O2{0}, P1{0}, P2{0};
};

/// Plain, barred (vacuum included) and tilde (anomalous) families. Vacuum
/// fluctuations are omitted, so `barred` always equals `plain`.
struct NoiseCoeffs {
    NoiseFamily plain;
    NoiseFamily barred;
    NoiseFamily tilde;
};

NoiseFamily noise_family(const DimerParams& dimer, double hbar, const ResponseIntegrals& ints);

NoiseCoeffs noise_coefficients(const Scenario& scenario, const ResponseSet& ints);

}  // namespace excidyn
