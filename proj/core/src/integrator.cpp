#include "excidyn/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace excidyn {

IntegrationError::IntegrationError(const std::string& what, double t, StateVector last)
    : std::runtime_error(what), time_(t), last_(std::move(last)) {}

Propagator::Propagator(Scenario scenario)
    : scenario_((require_valid(scenario), std::move(scenario))),
      phonon_(scenario_),
      rates_(convolution_rates(scenario_)),
      noisy_(scenario_.noise.ns != 0.0 || scenario_.noise.anomalous_ns != 0.0) {}

GeneratorMatrices Propagator::generator(double t, const ConvolutionState& conv) const {
    NoiseCoeffs noise;
    if (noisy_) noise = noise_coefficients(scenario_, response_integrals(t, scenario_, conv));
    return assemble_generator(scenario_.dimer, scenario_.constants.hbar, phonon_.at(t),
                              coherent_drive(t, scenario_), noise);
}

Propagator::Derivative Propagator::derivative(const Vec9& state, const ConvolutionState& conv,
                                              double t) const {
    Derivative d;
    d.state = generator(t, conv).total() * state;
    if (noisy_) d.conv = convolution_derivative(conv, t, rates_, scenario_.pulse);
    return d;
}

ExtendedState Propagator::step(const ExtendedState& x, double t, double h) const {
    auto shift = [](const ConvolutionState& z, const ConvolutionState& dz, double a) {
        return ConvolutionState{z.z_plus + a * dz.z_plus, z.z_minus + a * dz.z_minus};
    };
    const Vec9& y = x.state.values;
    const auto k1 = derivative(y, x.conv, t);
    const auto k2 = derivative(y + 0.5 * h * k1.state, shift(x.conv, k1.conv, 0.5 * h), t + 0.5 * h);
    const auto k3 = derivative(y + 0.5 * h * k2.state, shift(x.conv, k2.conv, 0.5 * h), t + 0.5 * h);
    const auto k4 = derivative(y + h * k3.state, shift(x.conv, k3.conv, h), t + h);

    ExtendedState out;
    out.state.values = y + (h / 6.0) * (k1.state + 2.0 * k2.state + 2.0 * k3.state + k4.state);
    if (noisy_) {
        auto combine = [&](cplx z, cplx a, cplx b, cplx c, cplx d) {
            return z + (h / 6.0) * (a + 2.0 * b + 2.0 * c + d);
        };
        out.conv.z_plus = combine(x.conv.z_plus, k1.conv.z_plus, k2.conv.z_plus, k3.conv.z_plus,
                                  k4.conv.z_plus);
        out.conv.z_minus = combine(x.conv.z_minus, k1.conv.z_minus, k2.conv.z_minus,
                                   k3.conv.z_minus, k4.conv.z_minus);
    }
    return out;
}

ExtendedState Propagator::initial() const {
    ExtendedState x;
    if (scenario_.initial_state) {
        for (int i = 0; i < 9; ++i) x.state.values[i] = (*scenario_.initial_state)[i];
    } else {
        x.state = StateVector::ground();
    }
    return x;
}

StateVector step(const StateVector& state, ConvolutionState& conv, double t, double h,
                 const Scenario& scenario) {
    const Propagator prop(scenario);
    auto next = prop.step({state, conv}, t, h);
    conv = next.conv;
    return next.state;
}

std::vector<double> step_schedule(const Scenario& s) {
    const double t0 = s.pulse.t0;
    const double end = s.numerics.end_time;
    const double h = s.numerics.h;
    const double corner = t0 + s.pulse.tau1;

    std::vector<double> grid{t0};
    grid.reserve(static_cast<std::size_t>((end - t0) / h) + 3);
    for (std::size_t n = 1;; ++n) {
        double t = t0 + static_cast<double>(n) * h;
        const double prev = grid.back();
        // Snap to the end when the remainder is a rounding artifact.
        if (t >= end || end - t < 1e-9 * h) t = end;
        if (prev < corner && corner < t && t - corner > 1e-9 * h && corner - prev > 1e-9 * h) {
            grid.push_back(corner);
        }
        grid.push_back(t);
        if (t == end) break;
    }
    return grid;
}

namespace {

void ensure_finite(const StateVector& s, double t) {
    if (s.values.allFinite()) return;
    std::ostringstream msg;
    msg << "non-finite state at t = " << t << " fs: [" << s.values.transpose() << "]";
    throw IntegrationError(msg.str(), t, s);
}

}  // namespace

TrajectoryRecord integrate(const Scenario& scenario) {
    const Propagator prop(scenario);
    const auto& s = prop.scenario();
    const auto grid = step_schedule(s);

    TrajectoryRecord rec;
    const std::size_t expected = grid.size() / static_cast<std::size_t>(s.numerics.output_stride) + 2;
    rec.times.reserve(expected);
    rec.states.reserve(expected);
    rec.monitors.reserve(expected);

    auto observe = [&](const StateVector& state, double t, bool record) {
        const auto m = monitors(reconstruct_density(state, t, s.dimer, s.constants.hbar));
        rec.max_abs_trace_dev = std::max(rec.max_abs_trace_dev, std::abs(m.trace_dev));
        if (m.min_eig < rec.min_eig) {
            rec.min_eig = m.min_eig;
            rec.min_eig_time = t;
        }
        if (record) {
            rec.times.push_back(t);
            rec.states.push_back(state);
            rec.monitors.push_back(m);
        }
    };

    ExtendedState x = prop.initial();
    ensure_finite(x.state, grid.front());
    rec.min_eig = monitors(reconstruct_density(x.state, grid.front(), s.dimer, s.constants.hbar)).min_eig;
    rec.min_eig_time = grid.front();
    observe(x.state, grid.front(), true);

    for (std::size_t i = 1; i < grid.size(); ++i) {
        x = prop.step(x, grid[i - 1], grid[i] - grid[i - 1]);
        ensure_finite(x.state, grid[i]);
        ++rec.steps;
        const bool last = i + 1 == grid.size();
        observe(x.state, grid[i], last || rec.steps % static_cast<std::size_t>(s.numerics.output_stride) == 0);
    }
    rec.positivity_flagged = rec.min_eig < -s.numerics.positivity_threshold;
    return rec;
}

}  // namespace excidyn
