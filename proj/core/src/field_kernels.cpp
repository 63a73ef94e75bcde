#include "excidyn/field_kernels.hpp"

#include <cmath>

namespace excidyn {

namespace {
constexpr cplx kI{0.0, 1.0};
}

double envelope(double t, const PulseParams& pulse) {
    const double s = t - pulse.t0;
    if (s < 0.0) return 0.0;
    if (s <= pulse.tau1) return 1.0;
    return std::exp(-(s - pulse.tau1) / pulse.tau2);
}

CoherentDriveCoeffs coherent_drive(double t, const Scenario& scenario) {
    const double a = envelope(t, scenario.pulse);
    if (a == 0.0) return {};
    const double phase = scenario.pulse.delta_prime * t;
    const double re = a * std::cos(phase);
    const double im = a * std::sin(phase);
    const double f1 = scenario.dimer.F1 / scenario.constants.hbar;
    const double f2 = scenario.dimer.F2 / scenario.constants.hbar;
    return {-f1 * im, f1 * re, -f2 * im, f2 * re};
}

cplx noise_correlation(double t, double tau, const Scenario& scenario) {
    const auto& n = scenario.noise;
    const double lag = t - tau;
    const double amp = envelope(t, scenario.pulse) * envelope(tau, scenario.pulse) * n.ns;
    return amp * std::exp(cplx(-n.gamma_s * std::abs(lag), -n.omega_s * lag));
}

ConvolutionRates convolution_rates(const Scenario& scenario) {
    const auto& n = scenario.noise;
    const double delta_rate = level_splitting(scenario.dimer.eps, scenario.dimer.J) /
                              scenario.constants.hbar;
    const cplx base(n.gamma_s, -(scenario.pulse.delta_prime - n.omega_s));
    return {base - kI * delta_rate, base + kI * delta_rate};
}

ConvolutionState convolution_derivative(const ConvolutionState& z, double t,
                                        const ConvolutionRates& rates, const PulseParams& pulse) {
    const double a = envelope(t, pulse);
    return {-rates.lambda_plus * z.z_plus + a, -rates.lambda_minus * z.z_minus + a};
}

ResponseSet response_integrals(double t, const Scenario& scenario, const ConvolutionState& conv) {
    const double a = envelope(t, scenario.pulse);
    const cplx cos_part = 0.5 * (conv.z_plus + conv.z_minus);
    const cplx sin_part = (conv.z_plus - conv.z_minus) / (2.0 * kI);

    ResponseSet out;
    const double normal = a * scenario.noise.ns;
    if (normal != 0.0) {
        const cplx c = normal * cos_part;
        const cplx s = normal * sin_part;
        out.normal = {c.real(), s.real(), c.imag(), s.imag()};
    }
    // The anomalous kernel carries exp(-i delta' (t + tau)) = exp(-2 i delta' t) exp(i delta' (t - tau)).
    const double anomalous = a * scenario.noise.anomalous_ns;
    if (anomalous != 0.0) {
        const cplx rot = anomalous * std::exp(cplx(0.0, -2.0 * scenario.pulse.delta_prime * t));
        const cplx c = rot * cos_part;
        const cplx s = rot * sin_part;
        out.anomalous = {c.real(), s.real(), c.imag(), s.imag()};
    }
    return out;
}

NoiseFamily noise_family(const DimerParams& dimer, double hbar, const ResponseIntegrals& in) {
    const double delta = level_splitting(dimer.eps, dimer.J);
    const double f1 = dimer.F1 / hbar;
    const double f2 = dimer.F2 / hbar;
    const double e = dimer.eps / delta;
    const double j = dimer.J / delta;
    const double f11 = f1 * f1, f22 = f2 * f2, f12 = f1 * f2;

    NoiseFamily c;
    c.M1 = f11 * in.i1 - f11 * e * in.i4 - f12 * j * in.i4;
    c.M2 = f11 * in.i3 + f11 * e * in.i2 + f12 * j * in.i2;
    c.N1 = f22 * in.i1 + f22 * e * in.i4 - f12 * j * in.i4;
    c.N2 = f22 * in.i3 - f22 * e * in.i2 + f12 * j * in.i2;
    c.O1 = -f11 * j * in.i4 + f12 * in.i1 + f12 * e * in.i4;
    c.O2 = f11 * j * in.i2 + f12 * in.i3 - f12 * e * in.i2;
    c.P1 = -f22 * j * in.i4 + f12 * in.i1 - f12 * e * in.i4;
    c.P2 = f22 * j * in.i2 + f12 * in.i3 + f12 * e * in.i2;
    return c;
}

NoiseCoeffs noise_coefficients(const Scenario& scenario, const ResponseSet& ints) {
    NoiseCoeffs out;
    out.plain = noise_family(scenario.dimer, scenario.constants.hbar, ints.normal);
    out.barred = out.plain;
    out.tilde = noise_family(scenario.dimer, scenario.constants.hbar, ints.anomalous);
    return out;
}

}  // namespace excidyn
