#include "run_config.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>

namespace liefrenet::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& problem) {
  throw ConfigError(field + ": " + problem);
}

void reject_unknown_keys(const json& obj, const std::string& prefix,
                         std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known)
      fail(prefix.empty() ? item.key() : prefix + "." + item.key(),
           "unknown key");
  }
}

const json& require_key(const json& obj, const std::string& prefix,
                        const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(prefix + "." + key, "missing");
  return *it;
}

double as_number(const json& node, const std::string& field) {
  if (!node.is_number()) fail(field, "must be a number");
  const double v = node.get<double>();
  if (!std::isfinite(v)) fail(field, "must be finite");
  return v;
}

std::vector<double> as_number_array(const json& node,
                                    const std::string& field) {
  if (!node.is_array() || node.empty())
    fail(field, "must be a non-empty array of numbers");
  std::vector<double> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i)
    out.push_back(as_number(node[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::string as_string(const json& node, const std::string& field) {
  if (!node.is_string()) fail(field, "must be a string");
  return node.get<std::string>();
}

std::pair<std::vector<double>, std::vector<double>> read_table_csv(
    const std::filesystem::path& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) fail(field, "cannot open table file " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "s,value")
    fail(field, "table file must start with header 's,value': " +
                    path.string());
  std::vector<double> s, v;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      fail(field, "table file row " + std::to_string(row) + " needs 2 columns");
    try {
      s.push_back(std::stod(line.substr(0, comma)));
      v.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      fail(field, "table file row " + std::to_string(row) + " is not numeric");
    }
  }
  return {std::move(s), std::move(v)};
}

ScalarProfile parse_scalar_profile(const json& node, const std::string& field,
                                   const std::filesystem::path& base_dir,
                                   json& echo) {
  if (!node.is_object()) fail(field, "must be an object with a 'form' key");
  const std::string form = as_string(require_key(node, field, "form"),
                                     field + ".form");
  try {
    if (form == "constant") {
      reject_unknown_keys(node, field, {"form", "value"});
      const double value =
          as_number(require_key(node, field, "value"), field + ".value");
      echo = json{{"form", "constant"}, {"value", value}};
      return ScalarProfile::constant(value);
    }
    if (form == "polynomial") {
      reject_unknown_keys(node, field, {"form", "coeffs"});
      const auto coeffs = as_number_array(
          require_key(node, field, "coeffs"), field + ".coeffs");
      echo = json{{"form", "polynomial"}, {"coeffs", coeffs}};
      return ScalarProfile::polynomial(coeffs);
    }
    if (form == "sinusoid") {
      reject_unknown_keys(
          node, field, {"form", "offset", "amplitude", "frequency", "phase"});
      const double offset =
          as_number(require_key(node, field, "offset"), field + ".offset");
      const double amplitude = as_number(
          require_key(node, field, "amplitude"), field + ".amplitude");
      const double frequency = as_number(
          require_key(node, field, "frequency"), field + ".frequency");
      const double phase =
          as_number(require_key(node, field, "phase"), field + ".phase");
      echo = json{{"form", "sinusoid"},
                  {"offset", offset},
                  {"amplitude", amplitude},
                  {"frequency", frequency},
                  {"phase", phase}};
      return ScalarProfile::sinusoid(offset, amplitude, frequency, phase);
    }
    if (form == "table") {
      std::vector<double> s, v;
      if (node.contains("path")) {
        reject_unknown_keys(node, field, {"form", "path"});
        const auto rel = as_string(node["path"], field + ".path");
        std::tie(s, v) = read_table_csv(base_dir / rel, field + ".path");
      } else {
        reject_unknown_keys(node, field, {"form", "s", "values"});
        s = as_number_array(require_key(node, field, "s"), field + ".s");
        v = as_number_array(require_key(node, field, "values"),
                            field + ".values");
      }
      // The echo always inlines the samples so reports stay
      // self-contained and reparse without the original file.
      echo = json{{"form", "table"}, {"s", s}, {"values", v}};
      return ScalarProfile::table(s, v);
    }
  } catch (const std::invalid_argument& e) {
    fail(field, e.what());
  }
  fail(field + ".form",
       "must be one of constant, polynomial, sinusoid, table");
}

}  // namespace

RunConfig load_config(const std::string& path,
                      const ConfigOverrides& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config: root must be an object");
  reject_unknown_keys(root, "",
                      {"group", "profile", "initial_frame", "arc", "method",
                       "transport", "develop", "develop_method", "out_dir",
                       "bench", "seed"});

  // group
  const json& group = require_key(root, "config", "group");
  if (!group.is_object()) fail("group", "must be an object");
  reject_unknown_keys(group, "group", {"kind", "c"});
  const std::string kind_name =
      as_string(require_key(group, "group", "kind"), "group.kind");
  GroupKind kind;
  bool echo_c = false;
  if (kind_name == "abelian") {
    kind = GroupKind::abelian();
  } else if (kind_name == "so3") {
    kind = GroupKind::so3();
  } else if (kind_name == "s3") {
    kind = GroupKind::s3();
  } else if (kind_name == "custom") {
    kind.tag = GroupTag::custom;
  } else {
    fail("group.kind", "must be one of abelian, so3, s3, custom");
  }
  if (group.contains("c")) {
    // For named kinds this overrides the preset constant; the verify
    // battery flags the mismatch, which is the negative-control path.
    const double c = as_number(group["c"], "group.c");
    if (c < 0.0) fail("group.c", "must be >= 0");
    kind.structure_constant = c;
    echo_c = true;
  } else if (kind_name == "custom") {
    fail("group.c", "missing (required for custom kind)");
  }

  // profile
  const json& profile_node = require_key(root, "config", "profile");
  if (!profile_node.is_object()) fail("profile", "must be an object");
  reject_unknown_keys(profile_node, "profile", {"kappa", "tau"});
  const std::filesystem::path base_dir =
      std::filesystem::path(path).parent_path();
  json kappa_echo, tau_echo;
  ScalarProfile kappa = parse_scalar_profile(
      require_key(profile_node, "profile", "kappa"), "profile.kappa",
      base_dir, kappa_echo);
  ScalarProfile tau = parse_scalar_profile(
      require_key(profile_node, "profile", "tau"), "profile.tau", base_dir,
      tau_echo);

  // initial_frame
  Frame frame{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  json frame_echo = "identity";
  if (root.contains("initial_frame") && root["initial_frame"] != "identity") {
    const json& fnode = root["initial_frame"];
    if (!fnode.is_array() || fnode.size() != 9)
      fail("initial_frame", "must be \"identity\" or an array of 9 numbers");
    double m[9];
    for (int i = 0; i < 9; ++i)
      m[i] = as_number(fnode[i], "initial_frame[" + std::to_string(i) + "]");
    frame = Frame{{m[0], m[1], m[2]}, {m[3], m[4], m[5]}, {m[6], m[7], m[8]}};
    try {
      validate_frame(frame);
    } catch (const std::invalid_argument& e) {
      fail("initial_frame", e.what());
    }
    frame_echo = fnode;
  }

  // arc
  const json& arc = require_key(root, "config", "arc");
  if (!arc.is_object()) fail("arc", "must be an object");
  reject_unknown_keys(arc, "arc", {"s0", "s1", "step"});
  const double s0 = as_number(require_key(arc, "arc", "s0"), "arc.s0");
  const double s1 = as_number(require_key(arc, "arc", "s1"), "arc.s1");
  const double step = as_number(require_key(arc, "arc", "step"), "arc.step");
  try {
    ArcGrid probe(s0, s1, step);
    (void)probe;
  } catch (const std::invalid_argument& e) {
    fail("arc", e.what());
  }

  // method (flag overrides config)
  std::string method_name = "rk4";
  if (root.contains("method"))
    method_name = as_string(root["method"], "method");
  if (overrides.method.has_value()) method_name = *overrides.method;
  IntegrationMethod method;
  if (method_name == "rk4") {
    method = IntegrationMethod::rk4;
  } else if (method_name == "rk4_renorm") {
    method = IntegrationMethod::rk4_renorm;
  } else {
    fail("method", "must be rk4 or rk4_renorm");
  }

  // transport
  std::string transport_name = "both";
  if (root.contains("transport"))
    transport_name = as_string(root["transport"], "transport");
  TransportSelection transport;
  if (transport_name == "frame") {
    transport = TransportSelection::frame;
  } else if (transport_name == "spinor") {
    transport = TransportSelection::spinor;
  } else if (transport_name == "both") {
    transport = TransportSelection::both;
  } else {
    fail("transport", "must be frame, spinor, or both");
  }

  // develop
  bool develop = false;
  if (root.contains("develop")) {
    if (!root["develop"].is_boolean()) fail("develop", "must be a boolean");
    develop = root["develop"].get<bool>();
  }
  std::string develop_method_name = "exp_midpoint";
  if (root.contains("develop_method"))
    develop_method_name = as_string(root["develop_method"], "develop_method");
  DevelopMethod develop_method;
  if (develop_method_name == "exp_midpoint") {
    develop_method = DevelopMethod::exp_midpoint;
  } else if (develop_method_name == "rk4_project") {
    develop_method = DevelopMethod::rk4_project;
  } else {
    fail("develop_method", "must be exp_midpoint or rk4_project");
  }

  // out_dir
  std::string out_dir = ".";
  if (root.contains("out_dir")) out_dir = as_string(root["out_dir"], "out_dir");
  if (overrides.out_dir.has_value()) out_dir = *overrides.out_dir;

  // bench
  std::vector<int> step_factors{1, 2, 4, 8};
  int reps = 3;
  if (root.contains("bench")) {
    const json& bench = root["bench"];
    if (!bench.is_object()) fail("bench", "must be an object");
    reject_unknown_keys(bench, "bench", {"step_factors", "reps"});
    if (bench.contains("step_factors")) {
      const json& f = bench["step_factors"];
      if (!f.is_array() || f.empty())
        fail("bench.step_factors", "must be a non-empty array of integers");
      step_factors.clear();
      for (std::size_t i = 0; i < f.size(); ++i) {
        const std::string field =
            "bench.step_factors[" + std::to_string(i) + "]";
        if (!f[i].is_number_integer()) fail(field, "must be an integer");
        const long long v = f[i].get<long long>();
        if (v < 1 || v > 4096) fail(field, "must be in [1, 4096]");
        step_factors.push_back(static_cast<int>(v));
      }
    }
    if (bench.contains("reps")) {
      if (!bench["reps"].is_number_integer())
        fail("bench.reps", "must be an integer");
      const long long v = bench["reps"].get<long long>();
      if (v < 1 || v > 1000) fail("bench.reps", "must be in [1, 1000]");
      reps = static_cast<int>(v);
    }
  }
  if (overrides.reps.has_value()) {
    if (*overrides.reps < 1 || *overrides.reps > 1000)
      fail("--reps", "must be in [1, 1000]");
    reps = *overrides.reps;
  }

  // seed
  std::uint64_t seed = kDefaultSeed;
  if (root.contains("seed")) {
    const json& s = root["seed"];
    if (!s.is_number_unsigned() && !(s.is_number_integer() &&
                                     s.get<long long>() >= 0))
      fail("seed", "must be a non-negative integer");
    seed = s.get<std::uint64_t>();
  }
  if (overrides.seed.has_value()) seed = *overrides.seed;

  // Cross-field validation. Frame transport needs a positive curvature;
  // probing every grid node catches constants and most profile shapes at
  // config time (exit 2), while dips between stage points remain the
  // integrator's mid-run failure (exit 3). The same sweep proves table
  // profiles cover the arc.
  {
    const ArcGrid grid(s0, s1, step);
    const bool needs_positive_kappa = transport != TransportSelection::spinor;
    for (std::size_t i = 0; i < grid.node_count(); ++i) {
      const double s = grid.node(i);
      try {
        const double k = kappa(s);
        if (needs_positive_kappa && !(k > 0.0)) {
          std::ostringstream msg;
          msg << "must stay positive for frame transport, got " << k
              << " at s = " << s;
          fail("profile.kappa", msg.str());
        }
      } catch (const std::domain_error& e) {
        fail("profile.kappa", e.what());
      }
      try {
        (void)tau(s);
      } catch (const std::domain_error& e) {
        fail("profile.tau", e.what());
      }
    }
  }

  json echo;
  echo["group"] = json{{"kind", kind_name}};
  if (echo_c) echo["group"]["c"] = kind.structure_constant;
  echo["profile"] = json{{"kappa", kappa_echo}, {"tau", tau_echo}};
  echo["initial_frame"] = frame_echo;
  echo["arc"] = json{{"s0", s0}, {"s1", s1}, {"step", step}};
  echo["method"] = method_name;
  echo["transport"] = transport_name;
  echo["develop"] = develop;
  echo["develop_method"] = develop_method_name;
  echo["bench"] = json{{"step_factors", step_factors}, {"reps", reps}};
  echo["seed"] = seed;

  return RunConfig{kind,
                   kind_name,
                   CurvatureProfile{std::move(kappa), std::move(tau)},
                   frame,
                   s0,
                   s1,
                   step,
                   method,
                   transport,
                   develop,
                   develop_method,
                   std::move(out_dir),
                   std::move(step_factors),
                   reps,
                   seed,
                   std::move(echo)};
}

}  // namespace liefrenet::cli
