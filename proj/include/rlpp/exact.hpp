#pragma once

#include <stdexcept>
#include <vector>

#include "rlpp/master.hpp"
#include "rlpp/plan.hpp"

namespace rlpp {

// Thrown when an exact oracle is asked for an enumeration beyond its
// configured limits; the oracles refuse rather than degrade.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumLimits {
  int max_lines = 12;
  int max_passengers = 12;
  int max_covered_per_line = 15;
};

struct ExactResult {
  double optimal_welfare = 0.0;
  LinePlan plan;
  long nodes_explored = 0;
  double seconds = 0.0;
};

// Exhaustive optimum of the line-planning problem: enumerates budget-
// feasible line subsets and, per subset, the optimal capacity-feasible
// assignment (branch and bound over passengers).
ExactResult brute_force_opt(const Instance& instance,
                            const EnumLimits& limits = {});

// Welfare of the optimal assignment for a fixed set of open lines.
double welfare_oracle_w(const Instance& instance,
                        const std::vector<LineId>& open_lines,
                        const EnumLimits& limits = {});

// All nonempty passenger sets feasible for the line (per-edge usage within
// C * frequency), sorted by size then lexicographically.
std::vector<std::vector<PassengerId>> enumerate_feasible_sets(
    const Instance& instance, LineId line, const EnumLimits& limits = {});

// The configuration LP with every feasible set materialized as a column;
// ground truth for column generation. eps may be any value in [0, 1].
FractionalSolution config_lp_full(const Instance& instance, double eps,
                                  const EnumLimits& limits = {});

}  // namespace rlpp
