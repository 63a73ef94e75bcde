#include <gtest/gtest.h>

#include <cmath>

#include "excidyn/model.hpp"
#include "excidyn_verify/oracles.hpp"

using namespace excidyn;

namespace {

DimerParams dimer(double eps, double J) {
    DimerParams d;
    d.eps = eps;
    d.J = J;
    return d;
}

}  // namespace

TEST(Eigensystem, MatchesGenericSolverOverGrid) {
    for (double eps : {-0.004, -0.002, -1e-7, 0.0, 1e-7, 0.0005, 0.002, 0.004}) {
        for (double J : {-0.005, 1e-8, 0.0005, 0.002, 0.007}) {
            const auto d = dimer(eps, J);
            const auto es = eigensystem(d);
            const auto ref = verify::numeric_eigensystem(d);
            EXPECT_NEAR(es.e_minus, ref.values[0], 1e-14);
            EXPECT_NEAR(es.e_plus, ref.values[1], 1e-14);
            EXPECT_NEAR(std::abs(es.v_minus.dot(ref.vectors.col(0))), 1.0, 1e-12);
            EXPECT_NEAR(std::abs(es.v_plus.dot(ref.vectors.col(1))), 1.0, 1e-12);
            EXPECT_NEAR(es.e_plus - es.e_minus, 2.0 * std::hypot(eps, J), 1e-15);
        }
    }
}

TEST(Eigensystem, VectorsAreOrthonormalEigenvectors) {
    for (double eps : {-0.003, 0.0, 0.001}) {
        const auto d = dimer(eps, 0.002);
        const auto es = eigensystem(d);
        const Eigen::Matrix2d H = site_hamiltonian(d);
        EXPECT_NEAR(es.v_plus.norm(), 1.0, 1e-15);
        EXPECT_NEAR(es.v_minus.norm(), 1.0, 1e-15);
        EXPECT_NEAR(es.v_plus.dot(es.v_minus), 0.0, 1e-15);
        EXPECT_LT((H * es.v_plus - es.e_plus * es.v_plus).norm(), 1e-14);
        EXPECT_LT((H * es.v_minus - es.e_minus * es.v_minus).norm(), 1e-14);
    }
}

TEST(Eigensystem, SymmetricDimerSplitsIntoBondingPair) {
    const auto es = eigensystem(dimer(0.0, 0.002));
    EXPECT_DOUBLE_EQ(es.delta, 0.002);
    EXPECT_NEAR(std::abs(es.v_plus[0]), M_SQRT1_2, 1e-15);
    EXPECT_NEAR(std::abs(es.v_plus[1]), M_SQRT1_2, 1e-15);
}

// Site 1 sits at E + 2 eps, so for eps > 0 the upper level is localized on molecule 1.
TEST(Eigensystem, UncoupledUpperLevelFollowsTheHigherSite) {
    auto es = eigensystem(dimer(0.001, 0.0));
    EXPECT_DOUBLE_EQ(std::abs(es.v_plus[0]), 1.0);
    EXPECT_DOUBLE_EQ(es.v_minus[0], 0.0);
    es = eigensystem(dimer(-0.001, 0.0));
    EXPECT_DOUBLE_EQ(std::abs(es.v_plus[1]), 1.0);
    // Continuity from tiny J.
    es = eigensystem(dimer(0.001, 1e-12));
    EXPECT_GT(std::abs(es.v_plus[0]), 1.0 - 1e-12);
}

TEST(Eigensystem, DegenerateSplittingRejected) {
    EXPECT_THROW(eigensystem(dimer(0.0, 0.0)), ScenarioError);
}

TEST(BoseOccupation, LimitsAndValue) {
    EXPECT_EQ(bose_occupation(0.01, 0.0), 0.0);
    EXPECT_NEAR(bose_occupation(0.01, 0.01), 1.0 / (std::exp(1.0) - 1.0), 1e-15);
    // High-temperature limit kT/E.
    EXPECT_NEAR(bose_occupation(1e-6, 1.0), 1e6, 1.0);
}

TEST(FreePropagator, UnitaryAndMatchesDiagonalization) {
    const auto d = dimer(0.0007, 0.002);
    const Constants c;
    for (double t : {0.0, 13.0, 500.0, 2500.0}) {
        const Eigen::Matrix2cd U = free_propagator(d, t, c);
        EXPECT_LT((U.adjoint() * U - Eigen::Matrix2cd::Identity()).norm(), 1e-13);
        const auto ref = verify::numeric_eigensystem(d);
        Eigen::Matrix2cd expected = Eigen::Matrix2cd::Zero();
        for (int k = 0; k < 2; ++k) {
            const Eigen::Vector2cd v = ref.vectors.col(k).cast<cplx>();
            expected += std::exp(cplx(0.0, -ref.values[k] * t / c.hbar)) * v * v.adjoint();
        }
        EXPECT_LT((U - expected).norm(), 1e-10);
    }
}

TEST(Validate, CollectsEveryIssue) {
    Scenario s;
    s.dimer.J = 0.001;
    s.pulse.tau2 = -1.0;
    s.bath.G = 0.004;
    s.bath.gamma_ph = 0.0;
    s.numerics.h = 0.0;
    const auto issues = validate(s);
    ASSERT_EQ(issues.size(), 3u);
    EXPECT_NE(issues[0].find("gamma_ph"), std::string::npos);
    EXPECT_NE(issues[1].find("tau2"), std::string::npos);
    EXPECT_NE(issues[2].find("numerics.h"), std::string::npos);
    try {
        require_valid(s);
        FAIL() << "expected ScenarioError";
    } catch (const ScenarioError& e) {
        EXPECT_EQ(e.issues(), issues);
    }
}

TEST(Validate, PhononlessRunNeedsNoBathWidth) {
    Scenario s;
    s.dimer.J = 0.001;
    s.pulse.tau1 = 100.0;
    EXPECT_TRUE(validate(s).empty());
}
