#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "csv.hpp"
#include "json.hpp"
#include "liefrenet/frenet.hpp"
#include "liefrenet/spinor_flow.hpp"
#include "log.hpp"
#include "verify_checks.hpp"

namespace liefrenet::cli {

namespace {

using nlohmann::json;

double finite(double v, const std::string& what) {
  if (!std::isfinite(v)) {
    throw std::runtime_error("non-finite report value: " + what);
  }
  return v;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << body;
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path.string());
  log_info("wrote " + path.string());
}

json base_report(const RunConfig& cfg, const char* command) {
  json doc;
  doc["schema_version"] = 1;
  doc["command"] = command;
  doc["config"] = cfg.echo;
  return doc;
}

void write_report(const RunConfig& cfg, const json& doc) {
  write_file(std::filesystem::path(cfg.out_dir) / "report.json",
             doc.dump(2) + "\n");
}

double frame_gap(const Frame& a, const Frame& b) {
  return std::max(
      {max_abs(a.t - b.t), max_abs(a.n - b.n), max_abs(a.b - b.b)});
}

double spinor_dist(const Spinor& a, const Spinor& b) {
  return std::sqrt(std::norm(a.c1 - b.c1) + std::norm(a.c2 - b.c2));
}

std::vector<std::string> position_header(const GroupPoint& p) {
  if (std::holds_alternative<Vec3>(p)) return {"p_x", "p_y", "p_z"};
  if (std::holds_alternative<Quaternion>(p))
    return {"q_w", "q_x", "q_y", "q_z"};
  return {"r_00", "r_01", "r_02", "r_10", "r_11",
          "r_12", "r_20", "r_21", "r_22"};
}

void append_position(std::vector<std::string>& row, const GroupPoint& p) {
  if (const auto* v = std::get_if<Vec3>(&p)) {
    row.push_back(format_double(v->x));
    row.push_back(format_double(v->y));
    row.push_back(format_double(v->z));
  } else if (const auto* q = std::get_if<Quaternion>(&p)) {
    row.push_back(format_double(q->w));
    row.push_back(format_double(q->x));
    row.push_back(format_double(q->y));
    row.push_back(format_double(q->z));
  } else {
    const Mat3& m = std::get<Mat3>(p);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) row.push_back(format_double(m.m[r][c]));
  }
}

void append_frame(std::vector<std::string>& row, const Frame& f) {
  for (const Vec3* v : {&f.t, &f.n, &f.b}) {
    row.push_back(format_double(v->x));
    row.push_back(format_double(v->y));
    row.push_back(format_double(v->z));
  }
}

void append_spinor(std::vector<std::string>& row, const Spinor& phi) {
  row.push_back(format_double(phi.c1.real()));
  row.push_back(format_double(phi.c1.imag()));
  row.push_back(format_double(phi.c2.real()));
  row.push_back(format_double(phi.c2.imag()));
}

/// Least-squares slope of log(err) against log(h). Empty when fewer than
/// two usable points remain.
std::optional<double> loglog_slope(const std::vector<double>& h,
                                   const std::vector<double>& err) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (err[i] > 0.0 && h[i] > 0.0) {
      xs.push_back(std::log(h[i]));
      ys.push_back(std::log(err[i]));
    }
  }
  if (xs.size() < 2) return std::nullopt;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

}  // namespace

int cmd_integrate(const RunConfig& cfg) {
  const ArcGrid grid = cfg.grid();
  const bool want_frame = cfg.transport != TransportSelection::spinor;
  const bool want_spinor = cfg.transport != TransportSelection::frame;

  std::optional<TransportResult> frame_run;
  std::optional<TransportResult> spinor_run;
  if (want_frame) {
    frame_run = integrate_frenet(cfg.profile, cfg.kind, cfg.initial_frame,
                                 grid, cfg.method);
  }
  if (want_spinor) {
    spinor_run = integrate_spinor(cfg.profile, cfg.kind,
                                  spinor_from_frame(cfg.initial_frame).first,
                                  grid, cfg.method);
  }

  std::vector<GroupPoint> curve;
  if (cfg.develop) {
    std::vector<Vec3> tangents;
    tangents.reserve(grid.node_count());
    if (want_frame) {
      for (const Frame& f : frame_run->frames) tangents.push_back(f.t);
    } else {
      for (const Spinor& phi : spinor_run->spinors)
        tangents.push_back(frame_from_spinor(phi).t);
    }
    curve = develop_curve(cfg.kind, identity_point(cfg.kind), tangents, grid,
                          cfg.develop_method);
  }

  std::vector<std::string> header{"s"};
  if (want_frame) {
    for (const char* name : {"t_x", "t_y", "t_z", "n_x", "n_y", "n_z", "b_x",
                             "b_y", "b_z"})
      header.emplace_back(name);
  }
  if (want_spinor) {
    for (const char* name : {"phi1_re", "phi1_im", "phi2_re", "phi2_im"})
      header.emplace_back(name);
  }
  if (cfg.develop) {
    for (auto& name : position_header(curve.front()))
      header.push_back(std::move(name));
  }

  const std::vector<double>& svals =
      want_frame ? frame_run->s : spinor_run->s;
  std::string csv = csv_row(header);
  for (std::size_t i = 0; i < svals.size(); ++i) {
    std::vector<std::string> row{format_double(svals[i])};
    if (want_frame) append_frame(row, frame_run->frames[i]);
    if (want_spinor) append_spinor(row, spinor_run->spinors[i]);
    if (cfg.develop) append_position(row, curve[i]);
    csv += csv_row(row);
  }

  json diag;
  if (want_frame && want_spinor) {
    double dev = 0.0;
    for (std::size_t i = 0; i < svals.size(); ++i) {
      dev = std::max(dev, frame_gap(frame_run->frames[i],
                                    frame_from_spinor(spinor_run->spinors[i])));
    }
    diag["max_frame_deviation"] = finite(dev, "max_frame_deviation");
  }
  if (want_spinor) {
    diag["spinor_norm_drift"] =
        finite(spinor_run->max_unit_defect, "spinor_norm_drift");
  }
  if (want_frame) {
    diag["frame_orthonormality_defect"] = finite(
        frame_run->max_orthonormality_defect, "frame_orthonormality_defect");
    diag["frame_unit_defect"] =
        finite(frame_run->max_unit_defect, "frame_unit_defect");
  }

  json doc = base_report(cfg, "integrate");
  doc["diagnostics"] = diag;
  doc["runtime"] = {{"nodes", grid.node_count()},
                    {"steps", grid.step_count()}};
  doc["artifacts"] = json::array({"samples.csv", "report.json"});

  write_file(std::filesystem::path(cfg.out_dir) / "samples.csv", csv);
  write_report(cfg, doc);
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const BatteryResult battery = run_verify_battery(cfg);

  json checks = json::array();
  bool all_pass = true;
  for (const Check& c : battery.checks) {
    json entry;
    entry["name"] = c.name;
    entry["measured"] = finite(c.measured, c.name);
    entry["threshold"] = c.threshold;
    entry["comparison"] = c.exceed ? "must_exceed" : "must_not_exceed";
    entry["pass"] = c.pass;
    checks.push_back(std::move(entry));
    if (!c.pass) {
      all_pass = false;
      log_error("check failed: " + c.name + " (measured " +
                format_double(c.measured) + ", threshold " +
                format_double(c.threshold) + ")");
    }
  }

  json doc = base_report(cfg, "verify");
  doc["checks"] = checks;
  doc["tangent_sign"] = kTangentSign;
  doc["diagnostics"] = {
      {"max_frame_deviation",
       finite(battery.equivalence.max_frame_deviation, "max_frame_deviation")},
      {"spinor_norm_drift",
       finite(battery.equivalence.spinor_norm_drift, "spinor_norm_drift")},
      {"frame_orthonormality_defect",
       finite(battery.equivalence.frame_orthonormality_defect,
              "frame_orthonormality_defect")},
      {"frame_unit_defect",
       finite(battery.equivalence.frame_unit_defect, "frame_unit_defect")}};
  doc["runtime"] = {{"checks", battery.checks.size()},
                    {"nodes", cfg.grid().node_count()}};
  doc["artifacts"] = json::array({"report.json"});

  write_report(cfg, doc);
  return all_pass ? 0 : 1;
}

int cmd_bench(const RunConfig& cfg) {
  const Spinor phi0 = spinor_from_frame(cfg.initial_frame).first;

  struct Measurement {
    const char* representation;
    int step_factor;
    double h;
    double endpoint_error;
    double drift;
  };
  std::vector<Measurement> rows;

  for (int factor : cfg.bench_step_factors) {
    std::optional<ArcGrid> coarse;
    try {
      coarse.emplace(cfg.s0, cfg.s1, cfg.step * factor);
    } catch (const std::invalid_argument&) {
      throw ConfigError("bench.step_factors: factor " +
                        std::to_string(factor) +
                        " yields a step exceeding the arc length");
    }
    const ArcGrid fine(cfg.s0, cfg.s1, coarse->step() / 8.0);

    const auto frame_coarse = integrate_frenet(cfg.profile, cfg.kind,
                                               cfg.initial_frame, *coarse,
                                               cfg.method);
    const auto frame_fine = integrate_frenet(cfg.profile, cfg.kind,
                                             cfg.initial_frame, fine,
                                             cfg.method);
    rows.push_back({"frame", factor, coarse->step(),
                    frame_gap(frame_coarse.frames.back(),
                              frame_fine.frames.back()),
                    frame_coarse.max_orthonormality_defect});

    const auto spinor_coarse = integrate_spinor(cfg.profile, cfg.kind, phi0,
                                                *coarse, cfg.method);
    const auto spinor_fine = integrate_spinor(cfg.profile, cfg.kind, phi0,
                                              fine, cfg.method);
    rows.push_back({"spinor", factor, coarse->step(),
                    spinor_dist(spinor_coarse.spinors.back(),
                                spinor_fine.spinors.back()),
                    spinor_coarse.max_unit_defect});
  }

  std::string csv =
      csv_row({"representation", "step_factor", "h", "endpoint_error",
               "drift"});
  for (const Measurement& m : rows) {
    csv += csv_row({m.representation, std::to_string(m.step_factor),
                    format_double(m.h), format_double(m.endpoint_error),
                    format_double(m.drift)});
  }

  // Wall time per step on the base grid, median over repetitions. Timing
  // is the one nondeterministic quantity and stays out of the CSV.
  const ArcGrid base = cfg.grid();
  std::vector<double> frame_ns, spinor_ns;
  double checksum = 0.0;
  using clock = std::chrono::steady_clock;
  for (int rep = 0; rep < cfg.bench_reps; ++rep) {
    const auto t0 = clock::now();
    const auto fr = integrate_frenet(cfg.profile, cfg.kind, cfg.initial_frame,
                                     base, cfg.method);
    const auto t1 = clock::now();
    const auto sr = integrate_spinor(cfg.profile, cfg.kind, phi0, base,
                                     cfg.method);
    const auto t2 = clock::now();
    checksum += fr.frames.back().t.x + sr.spinors.back().c1.real();
    const double steps = static_cast<double>(base.step_count());
    frame_ns.push_back(
        std::chrono::duration<double, std::nano>(t1 - t0).count() / steps);
    spinor_ns.push_back(
        std::chrono::duration<double, std::nano>(t2 - t1).count() / steps);
  }
  log_debug("bench checksum " + format_double(checksum));
  const auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
  };
  const double frame_med = median(frame_ns);
  const double spinor_med = median(spinor_ns);

  json diag;
  std::vector<double> hs, frame_err, spinor_err;
  json measurements = json::array();
  for (const Measurement& m : rows) {
    measurements.push_back(
        {{"representation", m.representation},
         {"step_factor", m.step_factor},
         {"h", finite(m.h, "h")},
         {"endpoint_error", finite(m.endpoint_error, "endpoint_error")},
         {"drift", finite(m.drift, "drift")}});
    if (std::string_view(m.representation) == "frame") {
      hs.push_back(m.h);
      frame_err.push_back(m.endpoint_error);
    } else {
      spinor_err.push_back(m.endpoint_error);
    }
  }
  diag["measurements"] = std::move(measurements);
  if (const auto slope = loglog_slope(hs, frame_err)) {
    diag["endpoint_error_slope_frame"] =
        finite(*slope, "endpoint_error_slope_frame");
  }
  if (const auto slope = loglog_slope(hs, spinor_err)) {
    diag["endpoint_error_slope_spinor"] =
        finite(*slope, "endpoint_error_slope_spinor");
  }

  json doc = base_report(cfg, "bench");
  doc["diagnostics"] = diag;
  doc["runtime"] = {
      {"reps", cfg.bench_reps},
      {"steps_per_rep", base.step_count()},
      {"frame_ns_per_step", finite(frame_med, "frame_ns_per_step")},
      {"spinor_ns_per_step", finite(spinor_med, "spinor_ns_per_step")},
      {"time_ratio_frame_over_spinor",
       finite(spinor_med > 0.0 ? frame_med / spinor_med : 0.0,
              "time_ratio_frame_over_spinor")}};
  doc["artifacts"] = json::array({"bench.csv", "report.json"});

  write_file(std::filesystem::path(cfg.out_dir) / "bench.csv", csv);
  write_report(cfg, doc);
  return 0;
}

}  // namespace liefrenet::cli
