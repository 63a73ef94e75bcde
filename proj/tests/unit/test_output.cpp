#include <gtest/gtest.h>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "excidyn/output.hpp"
#include "excidyn/presets.hpp"
#include "excidyn/sweep.hpp"

using namespace excidyn;
namespace fs = std::filesystem;

namespace {

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Scenario short_run(const char* name, double end) {
    auto s = preset(name);
    s.numerics.end_time = end;
    s.numerics.output_stride = 20;
    return s;
}

}  // namespace

TEST(FormatDouble, ShortestRoundTrip) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 2000; ++i) {
        const double x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
        const auto s = format_double(x);
        double back = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        EXPECT_EQ(back, x) << s;
    }
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(1.0), "1");
    EXPECT_EQ(format_double(-0.0), "0");
}

TEST(TrajectoryCsv, HeaderAndRows) {
    const auto rec = integrate(short_run("fig4", 10.0));
    const auto csv = trajectory_csv(rec);
    EXPECT_EQ(first_line(csv),
              "t,p0,p1,p2,rho_r,rho_i,rho_1r,rho_1i,rho_2r,rho_2i,trace_dev,min_eig,purity");
    std::size_t lines = 0;
    for (char c : csv) lines += c == '\n';
    EXPECT_EQ(lines, rec.times.size() + 1);
    EXPECT_EQ(csv.substr(csv.find('\n') + 1, 6), "0,1,0,");
}

TEST(TrajectoryCsv, RepeatedRunsAreByteIdentical) {
    const auto s = short_run("fig12", 200.0);
    EXPECT_EQ(trajectory_csv(integrate(s)), trajectory_csv(integrate(s)));
}

TEST(Dumps, Headers) {
    EXPECT_EQ(first_line(phonon_dump_csv(short_run("fig5C", 50.0))),
              "t,A,B,C,D,E,F,A1,B1,A2,B2,C1,D1,C2,D2");
    EXPECT_EQ(first_line(field_dump_csv(short_run("fig12", 50.0))),
              "t,K1,K2,L1,L2,i1,i2,i3,i4,M1,M2,N1,N2,O1,O2,P1,P2");
}

TEST(Sweep, ExpandsInOrderAndLocksDetuning) {
    const auto base = preset("fig6B");
    const auto family = expand_sweep(base, {"dimer.eps", {0.001, -0.002}, std::nullopt});
    ASSERT_EQ(family.size(), 2u);
    for (const auto& s : family) {
        EXPECT_NEAR(s.constants.hbar * s.pulse.delta_prime, -s.dimer.eps, 1e-18);
    }
    const auto unlocked = expand_sweep(base, {"dimer.eps", {0.001}, false});
    EXPECT_EQ(unlocked[0].pulse.delta_prime, base.pulse.delta_prime);

    const auto plain = expand_sweep(preset("fig3A"), {"dimer.J", {0.001, 0.002}, std::nullopt});
    EXPECT_EQ(plain[1].dimer.J, 0.002);
    EXPECT_EQ(plain[1].pulse.delta_prime, preset("fig3A").pulse.delta_prime);

    EXPECT_THROW(expand_sweep(base, {"dimer.eps", {}, std::nullopt}), ScenarioError);
    EXPECT_THROW(expand_sweep(base, {"dimer.bogus", {1.0}, std::nullopt}), ScenarioError);
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
    const auto base = short_run("fig3A", 300.0);
    const SweepSpec spec{"dimer.J", {0.001, 0.002, 0.004}, std::nullopt};
    const auto root = fs::temp_directory_path() / "excidyn_sweep_threads";
    fs::remove_all(root);

    setenv("EXCIDYN_THREADS", "1", 1);
    EXPECT_EQ(sweep_threads(3), 1u);
    const auto serial = run_sweep(base, spec, root / "one");
    setenv("EXCIDYN_THREADS", "2", 1);
    EXPECT_EQ(sweep_threads(3), 2u);
    EXPECT_EQ(sweep_threads(1), 1u);
    const auto parallel = run_sweep(base, spec, root / "two");
    unsetenv("EXCIDYN_THREADS");

    ASSERT_EQ(serial.size(), 3u);
    for (std::size_t i = 0; i < serial.size(); ++i) {
        EXPECT_EQ(serial[i].value, spec.values[i]);
        EXPECT_EQ(slurp(serial[i].file), slurp(parallel[i].file));
        EXPECT_EQ(serial[i].file.filename(), parallel[i].file.filename());
    }
    EXPECT_TRUE(fs::exists(root / "one" / "manifest.json"));
    fs::remove_all(root);
}
