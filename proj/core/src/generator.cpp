#include "excidyn/generator.hpp"

#include <cmath>

namespace excidyn {

StateVector StateVector::ground() {
    StateVector s;
    s.values[rho00] = 1.0;
    return s;
}

Mat9 GeneratorMatrices::total() const {
    Mat9 m;
    m.topLeftCorner<5, 5>() = J1 - G1 - F1;
    m.topRightCorner<5, 4>() = -F2;
    m.bottomLeftCorner<4, 5>() = -F3;
    m.bottomRightCorner<4, 4>() = J2 - G2 - F4;
    return m;
}

void free_blocks(const DimerParams& d, double hbar, Mat5& J1, Mat4& J2) {
    const double J = d.J / hbar;
    const double e = d.eps / hbar;
    J1 << 0, 0, 0, -2 * J, 0,
          0, 0, 0, 2 * J, 0,
          0, 0, 0, 2 * e, 0,
          J, -J, -2 * e, 0, 0,
          0, 0, 0, 0, 0;
    J2 << 0, -e, 0, -J,
          e, 0, J, 0,
          0, -J, 0, e,
          J, 0, -e, 0;
}

GeneratorMatrices assemble_generator(const DimerParams& dimer, double hbar,
                                     const PhononCoefficients& p,
                                     const CoherentDriveCoeffs& k, const NoiseCoeffs& noise) {
    GeneratorMatrices g;
    free_blocks(dimer, hbar, g.J1, g.J2);

    g.G1 << 0, 0, 0, 0, 0,
            0, 0, 0, 0, 0,
            p.A, p.C, p.E, -p.F, 0,
            p.B, -p.D, p.F, p.E, 0,
            0, 0, 0, 0, 0;
    g.G2 << p.A1, -p.B1, p.C1, -p.D1,
            p.B1, p.A1, p.D1, p.C1,
            p.C2, -p.D2, p.A2, -p.B2,
            p.D2, p.C2, p.B2, p.A2;

    const auto& n = noise.plain;
    const auto& b = noise.barred;
    const auto& t = noise.tilde;
    g.F1 << 2 * b.M1, 0, 2 * b.O1, 2 * b.O2, -2 * n.M1,
            0, 2 * b.N1, 2 * b.P1, -2 * b.P2, -2 * n.N1,
            b.P1, b.O1, b.M1 + b.N1, -b.M2 + b.N2, -n.O1 - n.P1,
            -b.P2, b.O2, b.M2 - b.N2, b.M1 + b.N1, n.P2 - n.O2,
            -2 * b.M1, -2 * b.N1, -2 * b.P1 - 2 * b.O1, 2 * b.P2 - 2 * b.O2, 2 * n.M1 + 2 * n.N1;

    g.F2 << 2 * k.K1, -2 * k.K2, 0, 0,
            0, 0, 2 * k.L1, -2 * k.L2,
            k.L1, -k.L2, k.K1, -k.K2,
            -k.L2, -k.L1, k.K2, k.K1,
            -2 * k.K1, 2 * k.K2, -2 * k.L1, 2 * k.L2;
    g.F3 << -k.K1, 0, -k.L1, k.L2, k.K1,
            k.K2, 0, k.L2, k.L1, -k.K2,
            0, -k.L1, -k.K1, -k.K2, k.L1,
            0, k.L2, k.K2, -k.K1, -k.L2;

    g.F4 << 2 * n.M1 + n.N1 - 2 * t.M1, 2 * n.M2 + n.N2 - 2 * t.M2,
                n.O1 - t.O1 - t.P1, n.O2 - t.O2 - t.P2,
            -2 * n.M2 - n.N2 - 2 * t.M2, 2 * n.M1 + n.N1 + 2 * t.M1,
                -n.O2 - t.O2 - t.P2, n.O1 + t.O1 + t.P1,
            n.P1 - t.O1 - t.P1, n.P2 - t.O2 - t.P2,
                2 * n.N1 + n.M1 - 2 * t.N1, 2 * n.N2 + n.M2 - 2 * t.N2,
            -n.P2 - t.O2 - t.P2, n.P1 + t.O1 + t.P1,
                -2 * n.N2 - n.M2 - 2 * t.N2, 2 * n.N1 + n.M1 + 2 * t.N1;
    return g;
}

DensityMatrix3 reconstruct_density(const StateVector& s, double t, const DimerParams& dimer,
                                   double hbar) {
    using I = StateVector::Index;
    const cplx frame = std::exp(cplx(0.0, (dimer.E + dimer.eps) * t / hbar));
    const cplx rho01 = cplx(s[I::rho_1r], s[I::rho_1i]) * frame;
    const cplx rho02 = cplx(s[I::rho_2r], s[I::rho_2i]) * frame;
    const cplx rho12(s[I::rho_r], s[I::rho_i]);

    DensityMatrix3 d;
    d.rho(0, 0) = s[I::rho00];
    d.rho(1, 1) = s[I::rho11];
    d.rho(2, 2) = s[I::rho22];
    d.rho(0, 1) = rho01;
    d.rho(1, 0) = std::conj(rho01);
    d.rho(0, 2) = rho02;
    d.rho(2, 0) = std::conj(rho02);
    d.rho(1, 2) = rho12;
    d.rho(2, 1) = std::conj(rho12);
    return d;
}

Monitors monitors(const DensityMatrix3& density) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(density.rho, Eigen::EigenvaluesOnly);
    Monitors m;
    m.trace_dev = density.trace() - 1.0;
    m.min_eig = solver.eigenvalues().minCoeff();
    m.purity = density.rho.cwiseAbs2().sum();
    return m;
}

}  // namespace excidyn
