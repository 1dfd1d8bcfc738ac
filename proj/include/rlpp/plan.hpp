#pragma once

#include <cstdint>
#include <vector>

#include "rlpp/instance.hpp"

namespace rlpp {

// One opened line of a plan. After aggregation a plan line may stand for
// several same-route instance lines; `members` lists them and `frequency`
// is their sum.
struct OpenLine {
  LineId line = 0;                // representative: lowest member id
  std::vector<LineId> members;    // sorted, size >= 1
  int frequency = 1;
  double cost = 0.0;

  bool operator==(const OpenLine&) const = default;
};

// Passenger assigned through a specific instance line (the one whose value
// entry priced the trip); that line belongs to exactly one OpenLine.
struct Assignment {
  PassengerId passenger = 0;
  LineId line = 0;

  bool operator==(const Assignment&) const = default;
};

struct LinePlan {
  std::vector<OpenLine> open_lines;     // sorted by representative id
  std::vector<Assignment> assignment;   // sorted by passenger id
  double welfare = 0.0;
  double cost = 0.0;
  bool within_budget = true;
  std::uint64_t seed = 0;

  bool empty() const { return open_lines.empty(); }

  bool operator==(const LinePlan&) const = default;
};

struct WelfareCheck {
  double welfare = 0.0;
  double cost = 0.0;
  bool capacity_ok = true;
  bool single_line_ok = true;
  bool within_budget = true;

  bool feasible() const { return capacity_ok && single_line_ok; }
};

// Recomputes the plan's welfare from raw value entries and re-verifies the
// capacity, one-line-per-passenger, and budget constraints. Throws if an
// assignment references a passenger the line does not cover, or a line
// outside the plan's open set.
WelfareCheck welfare_of(const Instance& instance, const InstanceIndex& index,
                        const LinePlan& plan);

WelfareCheck welfare_of(const Instance& instance, const LinePlan& plan);

}  // namespace rlpp
