// integrator.hpp: fixed-step RK4 propagation of the dimer state

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "excidyn/field_kernels.hpp"
#include "excidyn/generator.hpp"
#include "excidyn/phonon_kernels.hpp"

namespace excidyn {

/// Raised when the state stops being finite.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double t, StateVector last);
    double time() const noexcept { return time_; }
    const StateVector& last_state() const noexcept { return last_; }

private:
    double time_;
    StateVector last_;
};

/// Dimer state plus the noise accumulators advanced alongside it.
struct ExtendedState {
    StateVector state;
    ConvolutionState conv;
};

/// Everything about a scenario that does not change along a run.
class Propagator {
public:
    explicit Propagator(Scenario scenario);

    const Scenario& scenario() const { return scenario_; }
    const PhononModel& phonon() const { return phonon_; }

    GeneratorMatrices generator(double t, const ConvolutionState& conv) const;

    /// One classical RK4 step; coefficients are evaluated at the stage times.
    ExtendedState step(const ExtendedState& x, double t, double h) const;

    /// Initial state at t0 from the scenario (excitonless unless overridden).
    ExtendedState initial() const;

private:
    struct Derivative {
        Vec9 state;
        ConvolutionState conv;
    };
    Derivative derivative(const Vec9& state, const ConvolutionState& conv, double t) const;

    Scenario scenario_;
    PhononModel phonon_;
    ConvolutionRates rates_;
    bool noisy_;
};

/// Convenience single step for callers without a Propagator.
StateVector step(const StateVector& state, ConvolutionState& conv, double t, double h,
                 const Scenario& scenario);

struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<StateVector> states;
    std::vector<Monitors> monitors;

    // extrema over every step, not only the recorded samples
    double max_abs_trace_dev{0.0};
    double min_eig{0.0};
    double min_eig_time{0.0};
    bool positivity_flagged{false};  // min_eig < -numerics.positivity_threshold
    std::size_t steps{0};
};

/// Integrates from t0 to numerics.end_time, recording every output_stride-th step and the final one.
TrajectoryRecord integrate(const Scenario& scenario);

/// Step-time grid from t0 to end_time with the envelope corner at t0 + tau1 inserted.
std::vector<double> step_schedule(const Scenario& scenario);

}  // namespace excidyn
