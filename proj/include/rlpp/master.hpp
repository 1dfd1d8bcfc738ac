#pragma once

#include <cstdint>
#include <vector>

#include "rlpp/instance.hpp"
#include "rlpp/pricing.hpp"
#include "rlpp/simplex.hpp"

namespace rlpp {

struct WeightedColumn {
  Column column;
  double weight = 0.0;  // X_{lS} in (0, 1]
};

// Output of the configuration-LP solve: columns with fractional weights,
// the terminal duals, and solve statistics.
struct FractionalSolution {
  std::vector<WeightedColumn> columns;  // pool insertion order, weight > 0
  double objective = 0.0;
  DualPrices duals;
  bool converged = false;
  double eps = 0.0;
  int rounds = 0;              // column-generation iterations
  int columns_generated = 0;   // pool size at termination
  long simplex_iterations = 0;
  double solve_seconds = 0.0;
  std::uint64_t seed = 0;
};

struct MasterConfig {
  double feasibility_tol = 1e-6;
  double optimality_tol = 1e-7;
  double pricing_tol = kPricingTol;
};

struct MasterResult {
  std::vector<double> weights;  // aligned with the input columns
  DualPrices duals;
  double objective = 0.0;
};

// Solves the restricted master over a fixed column set: maximize total
// welfare subject to the budget scaled by (1 - eps), one set per line, and
// one line per passenger. The empty solution is always feasible.
MasterResult restricted_master_solve(const Instance& instance,
                                     const InstanceIndex& index,
                                     const std::vector<Column>& columns,
                                     double eps,
                                     const MasterConfig& config = {});

// Same LP with the budget right-hand side given directly; shared by the
// restricted master and the full-enumeration oracle.
MasterResult solve_columns_lp(const Instance& instance,
                              const InstanceIndex& index,
                              const std::vector<Column>& columns,
                              double budget_rhs,
                              const MasterConfig& config = {});

// Column generation for the auxiliary configuration LP: alternates the
// restricted master with the per-line separation oracle, adding every
// violated column each round, until no line prices out or the wall-clock
// budget runs out (a normal outcome; the current solution is returned).
// Warm-starts from each line's greedy column. `seed` is echoed into the
// result for report provenance; the solve itself is deterministic.
FractionalSolution solve_config_lp(const Instance& instance,
                                   const InstanceIndex& index, double eps,
                                   double time_budget_secs, std::uint64_t seed,
                                   const MasterConfig& config = {});

// Constraint residuals of a fractional solution; all should be <= tol.
struct FractionalCheck {
  double budget_excess = 0.0;
  double line_excess = 0.0;
  double passenger_excess = 0.0;

  bool ok(double tol) const {
    return budget_excess <= tol && line_excess <= tol &&
           passenger_excess <= tol;
  }
};

FractionalCheck check_fractional(const Instance& instance,
                                 const InstanceIndex& index,
                                 const FractionalSolution& solution);

}  // namespace rlpp
