#pragma once

#include "run_config.hpp"

namespace liefrenet::cli {

/// Transport run writing samples.csv and report.json into cfg.out_dir.
int cmd_integrate(const RunConfig& cfg);

/// Property battery writing report.json; returns 1 when any check fails.
int cmd_verify(const RunConfig& cfg);

/// Representation benchmark writing bench.csv and report.json. Wall-clock
/// numbers live only in the report's runtime object; the CSV stays
/// byte-reproducible.
int cmd_bench(const RunConfig& cfg);

}  // namespace liefrenet::cli
