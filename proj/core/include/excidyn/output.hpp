// output.hpp: CSV writers for trajectories and coefficient dumps

#pragma once

#include <string>

#include "excidyn/integrator.hpp"

namespace excidyn {

/// Shortest decimal that parses back to the same double.
std::string format_double(double x);

/// t, p0, p1, p2, rho_r, rho_i, rho_1r, rho_1i, rho_2r, rho_2i, trace_dev, min_eig, purity
std::string trajectory_csv(const TrajectoryRecord& record);

/// t and the fourteen phonon coefficients A..F, A1..D2 on the recorded time grid.
std::string phonon_dump_csv(const Scenario& scenario);

/// t, K1, K2, L1, L2, i1..i4, M1..P2 along a propagated run (the noise
/// integrals need the accumulators, so the state is advanced too).
std::string field_dump_csv(const Scenario& scenario);

}  // namespace excidyn
