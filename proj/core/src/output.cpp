#include "excidyn/output.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace excidyn {

std::string format_double(double x) {
    if (x == 0.0) x = 0.0;  // no "-0" in the output
    std::array<char, 32> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

namespace {

void row(std::ostringstream& out, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) out << ',';
        out << format_double(v);
        first = false;
    }
    out << '\n';
}

}  // namespace

std::string trajectory_csv(const TrajectoryRecord& rec) {
    std::ostringstream out;
    out << "t,p0,p1,p2,rho_r,rho_i,rho_1r,rho_1i,rho_2r,rho_2i,trace_dev,min_eig,purity\n";
    using I = StateVector::Index;
    for (std::size_t n = 0; n < rec.times.size(); ++n) {
        const auto& s = rec.states[n];
        const auto& m = rec.monitors[n];
        row(out, {rec.times[n], s[I::rho00], s[I::rho11], s[I::rho22], s[I::rho_r], s[I::rho_i],
                  s[I::rho_1r], s[I::rho_1i], s[I::rho_2r], s[I::rho_2i], m.trace_dev, m.min_eig,
                  m.purity});
    }
    return out.str();
}

std::string phonon_dump_csv(const Scenario& scenario) {
    require_valid(scenario);
    const PhononModel model(scenario);
    const auto grid = step_schedule(scenario);
    const auto stride = static_cast<std::size_t>(scenario.numerics.output_stride);

    std::ostringstream out;
    out << "t,A,B,C,D,E,F,A1,B1,A2,B2,C1,D1,C2,D2\n";
    for (std::size_t n = 0; n < grid.size(); ++n) {
        if (n % stride != 0 && n + 1 != grid.size()) continue;
        const auto p = model.at(grid[n]);
        row(out, {grid[n], p.A, p.B, p.C, p.D, p.E, p.F, p.A1, p.B1, p.A2, p.B2, p.C1, p.D1, p.C2,
                  p.D2});
    }
    return out.str();
}

std::string field_dump_csv(const Scenario& scenario) {
    const Propagator prop(scenario);
    const auto& s = prop.scenario();
    const auto grid = step_schedule(s);
    const auto stride = static_cast<std::size_t>(s.numerics.output_stride);

    std::ostringstream out;
    out << "t,K1,K2,L1,L2,i1,i2,i3,i4,M1,M2,N1,N2,O1,O2,P1,P2\n";
    ExtendedState x = prop.initial();
    for (std::size_t n = 0; n < grid.size(); ++n) {
        if (n > 0) x = prop.step(x, grid[n - 1], grid[n] - grid[n - 1]);
        if (n % stride != 0 && n + 1 != grid.size()) continue;
        const double t = grid[n];
        const auto k = coherent_drive(t, s);
        const auto ints = response_integrals(t, s, x.conv);
        const auto m = noise_coefficients(s, ints).plain;
        const auto& i = ints.normal;
        row(out, {t, k.K1, k.K2, k.L1, k.L2, i.i1, i.i2, i.i3, i.i4, m.M1, m.M2, m.N1, m.N2, m.O1,
                  m.O2, m.P1, m.P2});
    }
    return out.str();
}

}  // namespace excidyn
