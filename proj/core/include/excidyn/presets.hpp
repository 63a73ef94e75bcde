// presets.hpp: parameter sets of the published figure runs

#pragma once

#include <string>
#include <vector>

#include "excidyn/model.hpp"

namespace excidyn {

/// All catalog names, in figure order.
const std::vector<std::string>& preset_names();

/// Caption parameter set for `name` (e.g. "fig4", "fig2C").
///
/// Captions quote hbar*Omega_ph, hbar*gamma_ph and hbar*delta' in eV; they are
/// converted to rates with the given hbar, which is also stored in the scenario.
/// Throws std::invalid_argument for unknown names.
Scenario preset(const std::string& name, double hbar = kHbarPhysical);

}  // namespace excidyn
