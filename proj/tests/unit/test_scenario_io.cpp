#include <gtest/gtest.h>

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "excidyn/presets.hpp"
#include "excidyn/scenario_io.hpp"

using namespace excidyn;
namespace fs = std::filesystem;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

std::vector<std::string> issues_of(const std::string& text) {
    try {
        scenario_from_json(text);
    } catch (const ScenarioError& e) {
        return e.issues();
    }
    return {};
}

bool has_issue(const std::vector<std::string>& issues, const std::string& needle) {
    return std::any_of(issues.begin(), issues.end(),
                       [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

std::string replace(std::string text, const std::string& from, const std::string& to) {
    const auto at = text.find(from);
    EXPECT_NE(at, std::string::npos) << from;
    return text.replace(at, from.size(), to);
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("excidyn_io_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST(ScenarioJson, EveryPresetRoundTripsExactly) {
    for (const auto& name : preset_names()) {
        const auto s = preset(name);
        const auto text = scenario_to_json(s);
        const auto back = scenario_from_json(text);
        EXPECT_EQ(scenario_to_json(back), text) << name;
        EXPECT_EQ(back.label, s.label);
        EXPECT_TRUE(same_bits(back.pulse.delta_prime, s.pulse.delta_prime)) << name;
        EXPECT_TRUE(same_bits(back.bath.omega_ph, s.bath.omega_ph)) << name;
        EXPECT_TRUE(same_bits(back.bath.g1_ratio.imag(), s.bath.g1_ratio.imag())) << name;
        EXPECT_TRUE(same_bits(back.noise.gamma_s, s.noise.gamma_s)) << name;
        EXPECT_EQ(back.bath.cross, s.bath.cross);
    }
}

TEST(ScenarioJson, CollectsEveryProblem) {
    auto text = scenario_to_json(preset("fig7B"));
    text = replace(text, "\"eps\"", "\"typo\": 1.0,\n    \"eps\"");
    text = replace(text, "\"gamma_ph\"", "\"gamma_ph_old\"");
    const auto tau2 = text.find("\"tau2\": ");
    text = text.substr(0, tau2) + "\"tau2\": -5.0" + text.substr(text.find_first_of(",\n}", tau2 + 8));
    const auto issues = issues_of(text);
    EXPECT_TRUE(has_issue(issues, "unknown key dimer.typo"));
    EXPECT_TRUE(has_issue(issues, "unknown key bath.gamma_ph_old"));
    EXPECT_TRUE(has_issue(issues, "missing bath.gamma_ph"));
    EXPECT_TRUE(has_issue(issues, "pulse.tau2 must be > 0"));
}

TEST(ScenarioJson, RejectsTypeErrorsAndMalformedText) {
    auto text = replace(scenario_to_json(preset("fig4")), "\"J\": ", "\"J\": \"big\", \"x\": ");
    EXPECT_TRUE(has_issue(issues_of(text), "dimer.J"));
    EXPECT_FALSE(issues_of("{ not json").empty());
    EXPECT_TRUE(has_issue(issues_of("{}"), "missing"));
}

TEST(ScenarioJson, AcceptsMinimalPhononlessDocument) {
    const auto s = scenario_from_json(R"({
        "label": "tiny",
        "dimer": {"eps": 0.0, "J": 0.001, "F1": 0.0005, "F2": 0.0},
        "pulse": {"tau1": 100, "tau2": 50}
    })");
    EXPECT_EQ(s.label, "tiny");
    EXPECT_EQ(s.bath.G, 0.0);
    EXPECT_EQ(s.dimer.E, 2.0);
    EXPECT_EQ(s.numerics.h, 0.05);
}

TEST(WithParameter, SetsNumericFields) {
    const auto base = preset("fig3A");
    const auto s = with_parameter(base, "dimer.J", 0.004);
    EXPECT_EQ(s.dimer.J, 0.004);
    EXPECT_EQ(s.dimer.F1, base.dimer.F1);
    EXPECT_EQ(with_parameter(base, "numerics.output_stride", 7).numerics.output_stride, 7);
    EXPECT_THROW(with_parameter(base, "dimer.nothing", 1.0), ScenarioError);
    EXPECT_THROW(with_parameter(base, "label", 1.0), ScenarioError);
    EXPECT_THROW(with_parameter(base, "pulse.tau2", -1.0), ScenarioError);
}

TEST(Files, SaveLoadAndAtomicWrite) {
    const auto dir = scratch("files");
    const auto s = preset("fig12");
    save_scenario(s, dir / "fig12.json");
    EXPECT_EQ(scenario_to_json(load_scenario(dir / "fig12.json")), scenario_to_json(s));

    write_file_atomic(dir / "a.txt", "first");
    write_file_atomic(dir / "a.txt", "second");
    std::ifstream in(dir / "a.txt");
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), "second");
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
    EXPECT_EQ(files, 2u);

    EXPECT_THROW(load_scenario(dir / "missing.json"), std::exception);
    fs::remove_all(dir);
}
