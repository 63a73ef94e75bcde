#include "excidyn_verify/oracles.hpp"

#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace excidyn::verify {

namespace {

// Piecewise adaptive quadrature; pieces keep each panel within a few oscillations.
template <class F>
double integrate_pieces(F&& f, double a, double b, double max_piece) {
    using boost::math::quadrature::gauss_kronrod;
    if (b <= a) return 0.0;
    const auto pieces = static_cast<std::size_t>(std::ceil((b - a) / max_piece));
    const double width = (b - a) / static_cast<double>(pieces);
    double sum = 0.0;
    for (std::size_t p = 0; p < pieces; ++p) {
        const double lo = a + width * static_cast<double>(p);
        const double hi = p + 1 == pieces ? b : lo + width;
        sum += gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-14);
    }
    return sum;
}

double kind_weight(int kind, double delta_rate, double tau) {
    switch (kind) {
        case 1: return 1.0;
        case 2: {
            const double s = std::sin(delta_rate * tau);
            return s * s;
        }
        default: return std::sin(2.0 * delta_rate * tau);
    }
}

}  // namespace

double ModeSumKernels::value(int j, double tau) const {
    const double decay = std::exp(-gamma_ph * tau);
    const double osc = sine[j - 1] ? std::sin(omega_ph * tau) : std::cos(omega_ph * tau);
    return weight[j - 1] * osc * decay;
}

ModeSumKernels mode_sum_kernels(const BathParams& bath, const Constants& constants,
                                std::size_t modes) {
    const double hbar = constants.hbar;
    const double thermal = 2.0 * bath.nB + 1.0;
    const cplx g1 = bath.g1_ratio;
    const cplx g2 = bath.g2_ratio;
    const bool direct = bath.cross == CrossConvention::direct_mirror;

    // Omega_k^2 G^i_k G^j_{k'} = G_i G_j / hbar^2; dividing by G^2 leaves the ratios.
    std::array<double, 11> sums{};
    for (std::size_t k = 0; k < modes; ++k) {
        const bool first = k < modes / 2;
        const cplx a1 = first ? g1 : std::conj(g1);
        const cplx a2 = first ? g2 : std::conj(g2);
        const cplx m1 = direct ? a1 : std::conj(a1);  // G^1_{-k}
        const cplx m2 = direct ? a2 : std::conj(a2);  // G^2_{-k}
        const cplx cross3 = (a1 - a2) * (m1 + m2);
        const cplx cross = a1 * m2;
        sums[0] += std::norm(a1 - a2);
        sums[1] += std::norm(a1 - a2);
        sums[2] += cross3.real();
        sums[3] += std::norm(a1);
        sums[4] += cross.real();
        sums[5] += cross.imag();
        sums[6] += std::norm(a2);
        sums[7] += std::norm(a1);
        sums[8] += cross.real();
        sums[9] += cross.imag();
        sums[10] += std::norm(a2);
    }

    ModeSumKernels out;
    out.omega_ph = bath.omega_ph;
    out.gamma_ph = bath.gamma_ph;
    constexpr std::array<bool, 11> sine{false, true, true, false, false, false,
                                        false, true, true, true,  true};
    out.sine = sine;
    for (int j = 0; j < 11; ++j) {
        const double w = sums[j] / static_cast<double>(modes) / (hbar * hbar);
        out.weight[j] = sine[j] ? w : w * thermal;
    }
    return out;
}

double gbar_quadrature(const ModeSumKernels& kernels, int kind, int j, double T,
                       double delta_rate) {
    auto f = [&](double tau) { return kernels.value(j, tau) * kind_weight(kind, delta_rate, tau); };
    // Panels no wider than a tenth of the fastest period present.
    const double fastest = std::max({kernels.omega_ph + 2.0 * delta_rate, 1e-3});
    return integrate_pieces(f, 0.0, T, 0.6 / fastest + 1.0);
}

ResponseIntegrals response_quadrature(double t, const Scenario& s, bool anomalous) {
    const double delta_rate = level_splitting(s.dimer.eps, s.dimer.J) / s.constants.hbar;
    const double dp = s.pulse.delta_prime;
    const auto& n = s.noise;

    auto correlation = [&](double tau) -> cplx {
        if (!anomalous) return noise_correlation(t, tau, s) * std::exp(cplx(0.0, dp * (t - tau)));
        const double lag = t - tau;
        const double amp = envelope(t, s.pulse) * envelope(tau, s.pulse) * n.anomalous_ns;
        return amp * std::exp(cplx(-n.gamma_s * std::abs(lag), -n.omega_s * lag)) *
               std::exp(cplx(0.0, -dp * (t + tau)));
    };
    const double fastest = std::max({std::abs(dp - n.omega_s) + delta_rate, n.gamma_s, 1e-3});
    const double piece = 0.6 / fastest + 1.0;

    // Envelope corner inside [t0, t] would spoil Gauss-Kronrod convergence; split there.
    std::vector<double> cuts{s.pulse.t0};
    const double corner = s.pulse.t0 + s.pulse.tau1;
    if (corner > s.pulse.t0 && corner < t) cuts.push_back(corner);
    cuts.push_back(t);

    auto part = [&](auto&& trig, bool imag) {
        double sum = 0.0;
        for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
            sum += integrate_pieces(
                [&](double tau) {
                    const cplx v = correlation(tau);
                    return trig(delta_rate * (t - tau)) * (imag ? v.imag() : v.real());
                },
                cuts[c], cuts[c + 1], piece);
        }
        return sum;
    };
    auto c = [](double x) { return std::cos(x); };
    auto sn = [](double x) { return std::sin(x); };
    if (t <= s.pulse.t0) return {};
    return {part(c, false), part(sn, false), part(c, true), part(sn, true)};
}

double debye_waller_mode_sum(const BathParams& bath, const Constants& constants,
                             std::size_t modes) {
    const double hw = constants.hbar * bath.omega_ph;
    double sum = 0.0;
    for (std::size_t k = 0; k < modes; ++k) {
        const bool first = k < modes / 2;
        const cplx g1 = bath.G * (first ? bath.g1_ratio : std::conj(bath.g1_ratio)) / hw;
        const cplx g2 = bath.G * (first ? bath.g2_ratio : std::conj(bath.g2_ratio)) / hw;
        sum += std::norm(g1 - g2) * (2.0 * bath.nB + 1.0);
    }
    return 0.5 * sum / static_cast<double>(modes);
}

double rabi_population(double F, double detuning, double hbar, double T) {
    const double half = 0.5 * hbar * detuning;
    const double eff2 = F * F + half * half;
    if (eff2 == 0.0) return 0.0;
    const double s = std::sin(std::sqrt(eff2) * T / hbar);
    return F * F / eff2 * s * s;
}

Vec9 driven_dimer_exact(const Scenario& s, double t) {
    const auto& d = s.dimer;
    const double hbar = s.constants.hbar;
    const double dp = s.pulse.delta_prime;
    const double T = t - s.pulse.t0;

    // Frame rotating with the carrier: excited energies shifted by -hbar*omega.
    Eigen::Matrix3d H;
    H << 0.0, d.F1, d.F2,
         d.F1, d.eps + hbar * dp, d.J,
         d.F2, d.J, -d.eps + hbar * dp;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(H);
    Eigen::Vector3cd phases;
    for (int i = 0; i < 3; ++i) phases[i] = std::exp(cplx(0.0, -es.eigenvalues()[i] * T / hbar));
    const Eigen::Matrix3cd V = es.eigenvectors().cast<cplx>();
    const Eigen::Matrix3cd U = V * phases.asDiagonal() * V.adjoint();

    const Eigen::Vector3cd psi = U.col(0);
    const cplx frame = std::exp(cplx(0.0, -dp * t));  // carrier frame -> (E+eps) frame for rho_0j

    const cplx r01 = psi[0] * std::conj(psi[1]) * frame;
    const cplx r02 = psi[0] * std::conj(psi[2]) * frame;
    const cplx r12 = psi[1] * std::conj(psi[2]);
    Vec9 out;
    out << std::norm(psi[1]), std::norm(psi[2]), r12.real(), r12.imag(), std::norm(psi[0]),
        r01.real(), r01.imag(), r02.real(), r02.imag();
    return out;
}

NumericEigen numeric_eigensystem(const DimerParams& dimer) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(site_hamiltonian(dimer));
    return {es.eigenvalues(), es.eigenvectors()};
}

}  // namespace excidyn::verify
