// generator.hpp: the 9x9 time-dependent generator, density reconstruction and monitors

#pragma once

#include <Eigen/Dense>

#include "excidyn/field_kernels.hpp"
#include "excidyn/model.hpp"
#include "excidyn/phonon_kernels.hpp"

namespace excidyn {

using Vec9 = Eigen::Matrix<double, 9, 1>;
using Mat9 = Eigen::Matrix<double, 9, 9>;
using Mat5 = Eigen::Matrix<double, 5, 5>;
using Mat4 = Eigen::Matrix<double, 4, 4>;

/// Real state of the dimer. r1 = (rho11, rho22, rho_r, rho_i, rho00),
/// r2 = (rho_1r, rho_1i, rho_2r, rho_2i) with rho_0j taken in the frame rotating at (E+eps)/hbar.
struct StateVector {
    enum Index : int { rho11 = 0, rho22, rho_r, rho_i, rho00, rho_1r, rho_1i, rho_2r, rho_2i };

    Vec9 values = Vec9::Zero();

    /// Excitonless state rho00 = 1.
    static StateVector ground();

    double operator[](Index i) const { return values[i]; }
    double& operator[](Index i) { return values[i]; }

    auto r1() const { return values.head<5>(); }
    auto r2() const { return values.tail<4>(); }

    double trace() const { return values[rho11] + values[rho22] + values[rho00]; }
};

struct GeneratorMatrices {
    Mat5 J1 = Mat5::Zero();
    Mat4 J2 = Mat4::Zero();
    Mat5 G1 = Mat5::Zero();
    Mat4 G2 = Mat4::Zero();
    Mat5 F1 = Mat5::Zero();
    Eigen::Matrix<double, 5, 4> F2 = Eigen::Matrix<double, 5, 4>::Zero();
    Eigen::Matrix<double, 4, 5> F3 = Eigen::Matrix<double, 4, 5>::Zero();
    Mat4 F4 = Mat4::Zero();

    /// d/dt [r1; r2] = total() * [r1; r2] = (J - G - F) [r1; r2].
    Mat9 total() const;
};

/// Free exciton blocks (1/fs).
void free_blocks(const DimerParams& dimer, double hbar, Mat5& J1, Mat4& J2);

GeneratorMatrices assemble_generator(const DimerParams& dimer, double hbar,
                                     const PhononCoefficients& phonon,
                                     const CoherentDriveCoeffs& field, const NoiseCoeffs& noise);

/// Hermitian 3x3 density matrix over {|0>, |1>, |2>}.
struct DensityMatrix3 {
    Eigen::Matrix3cd rho = Eigen::Matrix3cd::Zero();

    double trace() const { return rho.trace().real(); }
};

/// Inverse of the real parametrization; the rotating-frame phase exp(i(E+eps)t/hbar) is reattached to rho_0j.
DensityMatrix3 reconstruct_density(const StateVector& state, double t, const DimerParams& dimer,
                                   double hbar);

struct Monitors {
    double trace_dev{0.0};  // trace - 1
    double min_eig{0.0};
    double purity{0.0};     // Tr rho^2
};

Monitors monitors(const DensityMatrix3& density);

}  // namespace excidyn
