#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rlpp/instance.hpp"
#include "rlpp/master.hpp"
#include "rlpp/plan.hpp"
#include "rlpp/rounding.hpp"

namespace rlpp {

inline constexpr int kFormatVersion = 1;

// Instance files: versioned JSON, schema documented in the README. Loading
// re-validates and rejects invalid instances; saving then loading yields an
// equal instance.
Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);
std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text,
                            const std::string& origin = "<string>");

// Plan files.
void save_plan(const LinePlan& plan, const std::string& path);
LinePlan load_plan(const std::string& path);

// FNV-1a 64-bit digest of the canonical instance serialization.
std::string instance_digest(const Instance& instance);

struct SolveArgs {
  double epsilon = 0.05;
  int replications = 10000;       // m
  double time_budget_secs = 60.0;
  std::uint64_t seed = 0;
  bool include_timings = true;    // timings are wall-clock, hence nulled
                                  // when byte-stable reports are needed
};

struct RunReport {
  std::string report_json;  // full report, serialized
  LinePlan plan;
  bool found_within_budget = false;
  double master_objective = 0.0;
  bool converged = false;
  RoundingStats stats;
};

// The solve pipeline behind `rlpp solve`: column generation, then best-of-m
// rounding. The report is byte-deterministic in (instance, args) when
// include_timings is false.
RunReport run_solve(const Instance& instance, const SolveArgs& args);

// GeoJSON export of a plan's opened routes; requires node coordinates.
std::string plan_to_geojson(const Instance& instance, const LinePlan& plan);
void export_plan_geo(const Instance& instance, const LinePlan& plan,
                     const std::string& path);

}  // namespace rlpp
