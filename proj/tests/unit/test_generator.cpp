#include <gtest/gtest.h>

#include <random>

#include "excidyn/generator.hpp"
#include "excidyn/integrator.hpp"
#include "excidyn/presets.hpp"

using namespace excidyn;

namespace {

GeneratorMatrices random_generator(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    DimerParams d;
    d.eps = 0.01 * u(rng);
    d.J = 0.01 * u(rng);
    PhononCoefficients p{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng),
                         u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    CoherentDriveCoeffs k{u(rng), u(rng), u(rng), u(rng)};
    auto family = [&] { return NoiseFamily{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)}; };
    NoiseCoeffs n{family(), family(), family()};
    return assemble_generator(d, 0.6582119569, p, k, n);
}

}  // namespace

TEST(Generator, ConservesTraceForAnyCoefficients) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Mat9 m = random_generator(rng).total();
        const auto trace_row = m.row(StateVector::rho11) + m.row(StateVector::rho22) + m.row(StateVector::rho00);
        EXPECT_LT(trace_row.cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(Generator, FreeBlocksFollowTheSiteHamiltonian) {
    DimerParams d;
    d.eps = 0.003;
    d.J = 0.002;
    const double hbar = 0.5;
    Mat5 J1;
    Mat4 J2;
    free_blocks(d, hbar, J1, J2);
    EXPECT_DOUBLE_EQ(J1(0, 3), -2 * d.J / hbar);
    EXPECT_DOUBLE_EQ(J1(2, 3), 2 * d.eps / hbar);
    EXPECT_DOUBLE_EQ(J1(3, 0), d.J / hbar);
    EXPECT_EQ(J1.row(4).cwiseAbs().sum(), 0.0);
    EXPECT_EQ(J1.col(4).cwiseAbs().sum(), 0.0);
    // J2 generates a rotation, so it is antisymmetric.
    EXPECT_LT((J2 + J2.transpose()).cwiseAbs().maxCoeff(), 1e-18);
}

TEST(Generator, DriveBlocksAreZeroBeforeThePulse) {
    auto s = preset("fig4");
    s.pulse.t0 = 20.0;
    const Propagator prop(s);
    const auto g = prop.generator(10.0, {});
    EXPECT_EQ(g.F2.cwiseAbs().sum(), 0.0);
    EXPECT_EQ(g.F3.cwiseAbs().sum(), 0.0);
    EXPECT_EQ(g.G1.cwiseAbs().sum(), 0.0);
}

TEST(Density, ReconstructionIsHermitianWithUnitTrace) {
    StateVector s;
    s.values << 0.3, 0.2, 0.05, -0.02, 0.5, 0.1, -0.07, 0.03, 0.04;
    DimerParams d;
    d.eps = 0.001;
    const auto rho = reconstruct_density(s, 123.0, d, 0.6582119569);
    EXPECT_LT((rho.rho - rho.rho.adjoint()).cwiseAbs().maxCoeff(), 1e-16);
    EXPECT_NEAR(rho.trace(), 1.0, 1e-15);
    EXPECT_DOUBLE_EQ(rho.rho(1, 2).real(), 0.05);
    EXPECT_DOUBLE_EQ(rho.rho(1, 2).imag(), -0.02);
    EXPECT_NEAR(std::abs(rho.rho(0, 1)), std::hypot(0.1, 0.07), 1e-15);
}

TEST(Monitors, PureAndMixedStates) {
    DensityMatrix3 pure;
    pure.rho(0, 0) = 1.0;
    auto m = monitors(pure);
    EXPECT_NEAR(m.purity, 1.0, 1e-15);
    EXPECT_NEAR(m.min_eig, 0.0, 1e-15);
    EXPECT_NEAR(m.trace_dev, 0.0, 1e-15);

    DensityMatrix3 mixed;
    mixed.rho = Eigen::Matrix3cd::Identity() / 3.0;
    m = monitors(mixed);
    EXPECT_NEAR(m.purity, 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(m.min_eig, 1.0 / 3.0, 1e-15);

    DensityMatrix3 bad;
    bad.rho(0, 0) = 1.1;
    bad.rho(1, 1) = -0.1;
    EXPECT_NEAR(monitors(bad).min_eig, -0.1, 1e-15);
}

TEST(Generator, ClosedSystemStaysPure) {
    auto s = preset("fig4");
    s.numerics.end_time = 800.0;
    const auto rec = integrate(s);
    for (const auto& m : rec.monitors) EXPECT_NEAR(m.purity, 1.0, 1e-9);
}
