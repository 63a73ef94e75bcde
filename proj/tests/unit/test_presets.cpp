#include <gtest/gtest.h>

#include <set>

#include "excidyn/presets.hpp"

using namespace excidyn;

TEST(Presets, CatalogIsCompleteAndValid) {
    const auto& names = preset_names();
    EXPECT_EQ(names.size(), 26u);
    std::set<std::string> unique(names.begin(), names.end());
    EXPECT_EQ(unique.size(), names.size());
    for (const auto& n : names) {
        const auto s = preset(n);
        EXPECT_EQ(s.label, n);
        EXPECT_TRUE(validate(s).empty()) << n;
        EXPECT_FALSE(s.initial_state.has_value()) << n;
    }
    EXPECT_THROW(preset("fig13"), std::invalid_argument);
}

TEST(Presets, CaptionEnergiesBecomeRates) {
    const auto s = preset("fig8");
    EXPECT_DOUBLE_EQ(s.bath.omega_ph * s.constants.hbar, 0.01);
    EXPECT_DOUBLE_EQ(s.bath.gamma_ph * s.constants.hbar, 0.01);
    EXPECT_DOUBLE_EQ(s.bath.G, 0.005);
    EXPECT_EQ(s.bath.g1_ratio, cplx(1.0, 0.25));
    EXPECT_EQ(s.bath.g2_ratio, cplx(1.0, -0.25));

    const auto unit = preset("fig8", 1.0);
    EXPECT_DOUBLE_EQ(unit.constants.hbar, 1.0);
    EXPECT_DOUBLE_EQ(unit.bath.omega_ph, 0.01);
}

TEST(Presets, DetuningFollowsCaptionLock) {
    for (const char* n : {"fig6B", "fig6C", "fig6D", "fig7A", "fig10", "fig11A", "fig11B"}) {
        const auto s = preset(n);
        EXPECT_DOUBLE_EQ(s.pulse.delta_prime * s.constants.hbar, -s.dimer.eps) << n;
    }
}

TEST(Presets, CaptionValues) {
    auto s = preset("fig2C");
    EXPECT_DOUBLE_EQ(s.bath.G, 0.01);
    EXPECT_DOUBLE_EQ(s.dimer.F1, 0.01);
    EXPECT_DOUBLE_EQ(s.pulse.tau1, 100.0);
    EXPECT_DOUBLE_EQ(s.pulse.tau2, 100.0);
    EXPECT_DOUBLE_EQ(s.bath.gamma_ph * s.constants.hbar, 0.001);

    s = preset("fig4");
    EXPECT_DOUBLE_EQ(s.dimer.J, 0.007);
    EXPECT_DOUBLE_EQ(s.dimer.F1, 0.0005);
    EXPECT_DOUBLE_EQ(s.bath.G, 0.0);

    s = preset("fig7C");
    EXPECT_DOUBLE_EQ(s.dimer.J, 0.005);
    EXPECT_DOUBLE_EQ(s.dimer.eps, 0.004);
    EXPECT_DOUBLE_EQ(s.bath.G, 0.005);

    s = preset("fig11B");
    EXPECT_DOUBLE_EQ(s.dimer.eps, -0.002);
    EXPECT_DOUBLE_EQ(s.dimer.F2, 0.0002);

    s = preset("fig12");
    EXPECT_DOUBLE_EQ(s.noise.ns, 0.1);
    EXPECT_DOUBLE_EQ(s.noise.gamma_s, 0.01);
    EXPECT_DOUBLE_EQ(s.dimer.F1, 0.01);
}
