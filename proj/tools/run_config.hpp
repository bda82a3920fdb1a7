#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "liefrenet/frame.hpp"
#include "liefrenet/frenet.hpp"
#include "liefrenet/group.hpp"
#include "liefrenet/profile.hpp"

namespace liefrenet::cli {

/// Raised for any config defect; the message names the offending field.
/// The CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class TransportSelection { frame, spinor, both };

inline constexpr std::uint64_t kDefaultSeed = 4242;

/// Fully validated run description. `echo` is the canonical form written
/// into reports; parsing it back yields an equivalent RunConfig (output
/// location aside).
struct RunConfig {
  GroupKind kind;
  std::string kind_name;
  CurvatureProfile profile;
  Frame initial_frame;
  double s0, s1, step;
  IntegrationMethod method;
  TransportSelection transport;
  bool develop;
  DevelopMethod develop_method;
  std::string out_dir;
  std::vector<int> bench_step_factors;
  int bench_reps;
  std::uint64_t seed;
  nlohmann::json echo;

  ArcGrid grid() const { return ArcGrid(s0, s1, step); }
};

struct ConfigOverrides {
  std::optional<std::string> out_dir;
  std::optional<std::string> method;
  std::optional<std::uint64_t> seed;
  std::optional<int> reps;
};

/// Loads, validates, and canonicalizes a config file. Unknown keys are
/// errors. Throws ConfigError with a field diagnostic on any defect.
RunConfig load_config(const std::string& path, const ConfigOverrides& overrides);

}  // namespace liefrenet::cli
