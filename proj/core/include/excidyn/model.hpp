// model.hpp: parameter records, dimer eigenstructure and the free propagator

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace excidyn {

using cplx = std::complex<double>;

/// Reduced Planck constant in eV*fs.
inline constexpr double kHbarPhysical = 0.6582119569;

/// Thrown for invalid parameter records. Carries every issue found, not just the first.
class ScenarioError : public std::runtime_error {
public:
    explicit ScenarioError(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const noexcept { return issues_; }

private:
    std::vector<std::string> issues_;
};

struct DimerParams {
    double E{2.0};    // site-2 excitation energy (eV); site 1 sits at E + 2*eps
    double eps{0.0};  // half splitting (eV)
    double J{0.0};    // transfer integral (eV)
    double F1{0.0};   // exciton-photon coupling at molecule 1 (eV)
    double F2{0.0};   // exciton-photon coupling at molecule 2 (eV)
};

/// How the mirror mode -k is paired with k when reducing the cross-term kernels.
enum class CrossConvention {
    conjugate_mirror,  // -k carries G_i* (hermitian half-space assignment)
    direct_mirror,     // -k carries the same value as k
};

struct BathParams {
    double G{0.0};                 // mean exciton-phonon coupling (eV)
    cplx g1_ratio{1.0, 0.0};       // G1 / G
    cplx g2_ratio{1.0, 0.0};       // G2 / G
    double nB{0.0};                // mean phonon occupation
    double omega_ph{0.0};          // mean phonon frequency (rad/fs)
    double gamma_ph{0.0};          // dephasing damping (1/fs)
    CrossConvention cross{CrossConvention::conjugate_mirror};
};

struct PulseParams {
    double tau1{0.0};         // plateau length (fs)
    double tau2{1.0};         // decay constant (fs)
    double delta_prime{0.0};  // detuning (E+eps)/hbar - carrier frequency (rad/fs)
    double t0{0.0};           // interaction start (fs)
};

struct NoiseParams {
    double ns{0.0};            // noise strength
    double gamma_s{0.0};       // phase-correlation decay (1/fs)
    double omega_s{0.0};       // frequency shift of the noise (rad/fs)
    double anomalous_ns{0.0};  // strength of the anomalous correlation family
};

struct Constants {
    double hbar{kHbarPhysical};  // eV*fs
};

struct Numerics {
    double h{0.05};                       // step (fs)
    double end_time{1000.0};              // fs
    int output_stride{20};                // steps between recorded samples
    double positivity_threshold{5e-3};    // |min eigenvalue| above this is flagged
};

/// Full parameter record for one run.
struct Scenario {
    std::string label;
    DimerParams dimer;
    BathParams bath;
    PulseParams pulse;
    NoiseParams noise;
    Constants constants;
    Numerics numerics;
    // (rho11, rho22, rho_r, rho_i, rho00, rho_1r, rho_1i, rho_2r, rho_2i); excitonless state when empty
    std::optional<std::array<double, 9>> initial_state;

    bool operator==(const Scenario&) const = default;
};

/// Lists every violated invariant; empty when the scenario is usable.
std::vector<std::string> validate(const Scenario& s);

/// Throws ScenarioError when validate() reports anything.
void require_valid(const Scenario& s);

struct Eigensystem {
    double delta{0.0};      // sqrt(eps^2 + J^2)
    double e_plus{0.0};
    double e_minus{0.0};
    Eigen::Vector2d v_plus;   // components on |1>, |2>
    Eigen::Vector2d v_minus;
};

double level_splitting(double eps, double J);

/// Eigenpairs of the site Hamiltonian [[E+2eps, J], [J, E]]. Rejects eps = J = 0.
Eigensystem eigensystem(const DimerParams& dimer);

/// Site Hamiltonian of the dimer (eV).
Eigen::Matrix2d site_hamiltonian(const DimerParams& dimer);

/// Bose-Einstein occupation 1/(exp(energy/kT) - 1); zero at kT = 0.
double bose_occupation(double energy, double kT);

/// <p| exp(-i H t / hbar) |s> in the site basis.
Eigen::Matrix2cd free_propagator(const DimerParams& dimer, double t, const Constants& constants);

}  // namespace excidyn
