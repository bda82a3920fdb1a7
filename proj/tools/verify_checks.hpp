#pragma once

#include <string>
#include <vector>

#include "liefrenet/spinor_flow.hpp"
#include "run_config.hpp"

namespace liefrenet::cli {

/// One verification check. `exceed` flips the comparison: most checks
/// pass when measured <= threshold, the orientation oracle passes when
/// the deliberately flipped dictionary deviates beyond its threshold.
struct Check {
  std::string name;
  double measured;
  double threshold;
  bool exceed;
  bool pass;
};

struct BatteryResult {
  std::vector<Check> checks;
  EquivalenceReport equivalence;
};

/// Property battery for the configured kind: algebra identities over
/// randomized instances (seeded from the config), bracket and torsion
/// identities, dictionary round trips, and the two-transport equivalence
/// over the configured grid.
BatteryResult run_verify_battery(const RunConfig& cfg);

/// The torsion constant the configured kind is supposed to have: the
/// preset value for named kinds, c/2 for custom. A config that overrides
/// c on a named kind breaks exactly this expectation.
double nominal_group_torsion(const RunConfig& cfg);

}  // namespace liefrenet::cli
