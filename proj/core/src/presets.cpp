#include "excidyn/presets.hpp"

#include <functional>
#include <stdexcept>

namespace excidyn {

namespace {

// Caption-level description: energies in eV, times in fs.
struct Caption {
    double F1{0.0}, F2{0.0}, J{0.0}, eps{0.0};
    double hbar_delta{0.0};
    double tau1{1000.0}, tau2{200.0};
    double G{0.0};
    cplx g1{1.0, 0.0}, g2{1.0, 0.0};
    double nB{0.0};
    double hbar_omega_ph{0.01}, hbar_gamma_ph{0.001};
    double ns{0.0}, gamma_s{0.0}, omega_s{0.0};
    double end_time{2500.0};
};

const cplx kRatio1{1.0, 0.25};
const cplx kRatio2{1.0, -0.25};

Caption two_level_phonons(double G) {
    Caption c;
    c.F1 = 0.01;
    c.J = 1e-8;
    c.tau1 = 100.0;
    c.tau2 = 100.0;
    c.G = G;
    c.g1 = kRatio1;
    c.g2 = kRatio2;
    c.end_time = 700.0;
    return c;
}

Caption one_molecule_pumped(double J) {
    Caption c;
    c.F1 = 0.0005;
    c.J = J;
    return c;
}

Caption with_fig5_bath(Caption c, double G) {
    c.G = G;
    c.g1 = kRatio1;
    c.g2 = kRatio2;
    return c;
}

Caption unbalanced(double J, double eps) {
    Caption c = one_molecule_pumped(J);
    c.eps = eps;
    c.hbar_delta = -eps;
    return c;
}

Caption both_pumped(double J, double eps) {
    Caption c;
    c.F1 = 0.0002;
    c.F2 = 0.0002;
    c.J = J;
    c.eps = eps;
    c.hbar_delta = -eps;
    return c;
}

const std::vector<std::pair<std::string, std::function<Caption()>>>& catalog() {
    static const std::vector<std::pair<std::string, std::function<Caption()>>> table = {
        {"fig2A", [] { return two_level_phonons(0.0); }},
        {"fig2B", [] { return two_level_phonons(0.004); }},
        {"fig2C", [] { return two_level_phonons(0.01); }},
        {"fig2D", [] { return two_level_phonons(0.02); }},
        {"fig3A", [] { return one_molecule_pumped(1e-8); }},
        {"fig3B", [] { return one_molecule_pumped(0.0005); }},
        {"fig3C", [] { return one_molecule_pumped(0.001); }},
        {"fig3D", [] { return one_molecule_pumped(0.002); }},
        {"fig4", [] { return one_molecule_pumped(0.007); }},
        {"fig5A", [] { return with_fig5_bath(one_molecule_pumped(0.0005), 0.0); }},
        {"fig5B", [] { return with_fig5_bath(one_molecule_pumped(0.0005), 0.003); }},
        {"fig5C", [] { return with_fig5_bath(one_molecule_pumped(0.0005), 0.005); }},
        {"fig6A", [] { return unbalanced(0.002, 0.0); }},
        {"fig6B", [] { return unbalanced(0.002, 0.0005); }},
        {"fig6C", [] { return unbalanced(0.002, 0.001); }},
        {"fig6D", [] { return unbalanced(0.002, 0.002); }},
        {"fig7A", [] { return with_fig5_bath(unbalanced(0.005, 0.004), 0.0); }},
        {"fig7B", [] { return with_fig5_bath(unbalanced(0.005, 0.004), 0.003); }},
        {"fig7C", [] { return with_fig5_bath(unbalanced(0.005, 0.004), 0.005); }},
        {"fig8",
         [] {
             Caption c = with_fig5_bath(one_molecule_pumped(0.0005), 0.005);
             c.hbar_gamma_ph = 0.01;
             return c;
         }},
        {"fig9A",
         [] {
             Caption c;
             c.F1 = 0.0002;
             c.J = 1e-8;
             return c;
         }},
        {"fig9B",
         [] {
             Caption c;
             c.F1 = 0.0002;
             c.F2 = 0.0002;
             c.J = 1e-8;
             return c;
         }},
        {"fig10", [] { return both_pumped(0.002, 0.0005); }},
        {"fig11A", [] { return both_pumped(0.002, 0.002); }},
        {"fig11B", [] { return both_pumped(0.002, -0.002); }},
        {"fig12",
         [] {
             Caption c;
             c.F1 = 0.01;
             c.J = 1e-8;
             c.ns = 0.1;
             c.gamma_s = 0.01;
             c.omega_s = 0.0;
             c.end_time = 1600.0;
             return c;
         }},
    };
    return table;
}

Scenario from_caption(const std::string& name, const Caption& c, double hbar) {
    Scenario s;
    s.label = name;
    s.dimer.E = 2.0;
    s.dimer.eps = c.eps;
    s.dimer.J = c.J;
    s.dimer.F1 = c.F1;
    s.dimer.F2 = c.F2;
    s.bath.G = c.G;
    s.bath.g1_ratio = c.g1;
    s.bath.g2_ratio = c.g2;
    s.bath.nB = c.nB;
    s.bath.omega_ph = c.hbar_omega_ph / hbar;
    s.bath.gamma_ph = c.hbar_gamma_ph / hbar;
    s.pulse.tau1 = c.tau1;
    s.pulse.tau2 = c.tau2;
    s.pulse.delta_prime = c.hbar_delta / hbar;
    s.pulse.t0 = 0.0;
    s.noise.ns = c.ns;
    s.noise.gamma_s = c.gamma_s;
    s.noise.omega_s = c.omega_s;
    s.constants.hbar = hbar;
    s.numerics.h = 0.05;
    s.numerics.end_time = c.end_time;
    s.numerics.output_stride = 20;
    return s;
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, _] : catalog()) out.push_back(name);
        return out;
    }();
    return names;
}

Scenario preset(const std::string& name, double hbar) {
    for (const auto& [key, make] : catalog()) {
        if (key == name) return from_caption(name, make(), hbar);
    }
    throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace excidyn
