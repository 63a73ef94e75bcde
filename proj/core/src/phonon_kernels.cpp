#include "excidyn/phonon_kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace excidyn {

namespace {

constexpr cplx kI{0.0, 1.0};

// exp(z) - 1 without cancellation for small |z|.
cplx expm1_complex(cplx z) {
    const double x = z.real();
    const double y = z.imag();
    const double s = std::sin(0.5 * y);
    const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
    const double im = std::exp(x) * std::sin(y);
    return {re, im};
}

cplx cosine_kernel(double amplitude) { return {amplitude, 0.0}; }
cplx sine_kernel(double amplitude) { return {0.0, -amplitude}; }

}  // namespace

double KernelConstants::value(int j, double tau) const {
    if (j < 1 || j > 11) throw std::out_of_range("kernel index must be in 1..11");
    return (c[j - 1] * std::exp(-lambda() * tau)).real();
}

KernelConstants reduce_kernels(const BathParams& bath, const Constants& constants) {
    const cplx r1 = bath.g1_ratio;
    const cplx r2 = bath.g2_ratio;
    const double inv_hbar2 = 1.0 / (constants.hbar * constants.hbar);
    const double thermal = 2.0 * bath.nB + 1.0;

    // Both halves of k-space contribute complex-conjugate terms, so every
    // half-space average reduces to a real part.
    const double diff2 = std::norm(r1 - r2);
    const double mod1 = std::norm(r1);
    const double mod2 = std::norm(r2);
    double cross_sum{};   // (G1_k - G2_k)(G1_-k + G2_-k)
    double cross_prod{};  // G1_k G2_-k
    if (bath.cross == CrossConvention::conjugate_mirror) {
        cross_sum = ((r1 - r2) * std::conj(r1 + r2)).real();
        cross_prod = (r1 * std::conj(r2)).real();
    } else {
        cross_sum = ((r1 - r2) * (r1 + r2)).real();
        cross_prod = (r1 * r2).real();
    }

    KernelConstants k;
    k.omega_ph = bath.omega_ph;
    k.gamma_ph = bath.gamma_ph;
    k.c[0] = cosine_kernel(diff2 * thermal * inv_hbar2);
    k.c[1] = sine_kernel(diff2 * inv_hbar2);
    k.c[2] = sine_kernel(cross_sum * inv_hbar2);
    k.c[3] = cosine_kernel(mod1 * thermal * inv_hbar2);
    k.c[4] = cosine_kernel(cross_prod * thermal * inv_hbar2);
    k.c[5] = cosine_kernel(0.0);  // imaginary parts cancel between the halves
    k.c[6] = cosine_kernel(mod2 * thermal * inv_hbar2);
    k.c[7] = sine_kernel(mod1 * inv_hbar2);
    k.c[8] = sine_kernel(cross_prod * inv_hbar2);
    k.c[9] = sine_kernel(0.0);
    k.c[10] = sine_kernel(mod2 * inv_hbar2);
    return k;
}

cplx damped_trig_integral(cplx lambda, double T) {
    if (T == 0.0) return {0.0, 0.0};
    const cplx x = lambda * T;
    if (std::abs(x) < 1e-6) {
        // T * (1 - x/2 + x^2/6 - x^3/24)
        return T * (1.0 - x / 2.0 + x * x / 6.0 - x * x * x / 24.0);
    }
    return -expm1_complex(-x) / lambda;
}

GbarWeights gbar_weights(cplx lambda, double T, double delta_rate) {
    const double u = 2.0 * delta_rate;
    const cplx base = damped_trig_integral(lambda, T);
    const cplx up = damped_trig_integral(lambda - kI * u, T);    // weight exp(+i u tau)
    const cplx down = damped_trig_integral(lambda + kI * u, T);  // weight exp(-i u tau)
    return {base, 0.5 * base - 0.25 * (up + down), (up - down) / (2.0 * kI)};
}

GbarWeights gbar_weights_limit(cplx lambda, double delta_rate) {
    if (!(lambda.real() > 0.0)) throw std::invalid_argument("limit requires gamma_ph > 0");
    const double u = 2.0 * delta_rate;
    const cplx base = 1.0 / lambda;
    const cplx up = 1.0 / (lambda - kI * u);
    const cplx down = 1.0 / (lambda + kI * u);
    return {base, 0.5 * base - 0.25 * (up + down), (up - down) / (2.0 * kI)};
}

GbarTable gbar_table(const KernelConstants& k, const GbarWeights& w) {
    GbarTable g{};
    for (int j = 0; j < 11; ++j) {
        g[0][j] = (k.c[j] * w.plain).real();
        g[1][j] = (k.c[j] * w.sin_squared).real();
        g[2][j] = (k.c[j] * w.sin_double).real();
    }
    return g;
}

double gbar(const KernelConstants& k, int kind, int j, double T, double delta_rate) {
    if (kind < 1 || kind > 3) throw std::out_of_range("gbar kind must be 1, 2 or 3");
    if (j < 1 || j > 11) throw std::out_of_range("kernel index must be in 1..11");
    if (T <= 0.0) return 0.0;
    const auto w = gbar_weights(k.lambda(), T, delta_rate);
    const cplx weight = kind == 1 ? w.plain : (kind == 2 ? w.sin_squared : w.sin_double);
    return (k.c[j - 1] * weight).real();
}

PhononCoefficients assemble_phonon_coefficients(const GbarTable& g, const DimerParams& dimer,
                                                double G) {
    const double delta = level_splitting(dimer.eps, dimer.J);
    const double G2 = G * G;
    const double q = dimer.J * dimer.eps / (delta * delta) * G2;  // J eps / Delta^2
    const double r = dimer.J / (2.0 * delta) * G2;                 // J / 2 Delta
    const double s = dimer.J * dimer.J / (delta * delta) * G2;     // J^2 / Delta^2

    // 1-based accessors matching the printed coefficient table
    auto g1 = [&](int j) { return g[0][j - 1]; };
    auto g2 = [&](int j) { return g[1][j - 1]; };
    auto g3 = [&](int j) { return g[2][j - 1]; };

    PhononCoefficients c;
    c.A = -q * g2(1) + r * g3(2);
    c.B = -q * g2(2) - r * g3(1);
    c.C = q * g2(1) + r * g3(2);
    c.D = q * g2(2) - r * g3(1);
    c.E = G2 * g1(1) - 2.0 * s * g2(1);
    c.F = -G2 * g1(3);

    c.A1 = G2 * g1(4) + s * (-g2(4) + g2(5) + g2(10));
    c.B1 = G2 * g1(8) + s * (-g2(6) - g2(8) + g2(9));
    c.A2 = G2 * g1(7) + s * (g2(5) - g2(7) - g2(10));
    c.B2 = G2 * g1(11) + s * (g2(6) + g2(9) - g2(11));
    c.C1 = q * (g2(4) - g2(5) - g2(10)) + r * (g3(6) + g3(8) - g3(9));
    c.D1 = q * (g2(6) + g2(8) - g2(9)) + r * (-g3(4) + g3(5) + g3(10));
    c.C2 = q * (g2(5) - g2(7) - g2(10)) + r * (-g3(6) - g3(9) + g3(11));
    c.D2 = q * (g2(6) + g2(9) - g2(11)) + r * (g3(5) - g3(7) - g3(10));
    return c;
}

PhononModel::PhononModel(const Scenario& scenario)
    : kernels_(reduce_kernels(scenario.bath, scenario.constants)),
      dimer_(scenario.dimer),
      G_(scenario.bath.G),
      t0_(scenario.pulse.t0),
      delta_rate_(level_splitting(scenario.dimer.eps, scenario.dimer.J) / scenario.constants.hbar) {}

GbarTable PhononModel::gbar_at(double t) const {
    const double T = t - t0_;
    if (T <= 0.0) return GbarTable{};
    return gbar_table(kernels_, gbar_weights(kernels_.lambda(), T, delta_rate_));
}

PhononCoefficients PhononModel::at(double t) const {
    if (G_ == 0.0 || t <= t0_) return {};
    return assemble_phonon_coefficients(gbar_at(t), dimer_, G_);
}

PhononCoefficients PhononModel::asymptotic() const {
    if (G_ == 0.0) return {};
    return assemble_phonon_coefficients(
        gbar_table(kernels_, gbar_weights_limit(kernels_.lambda(), delta_rate_)), dimer_, G_);
}

PhononCoefficients phonon_coefficients(double t, const Scenario& scenario) {
    return PhononModel(scenario).at(t);
}

}  // namespace excidyn
