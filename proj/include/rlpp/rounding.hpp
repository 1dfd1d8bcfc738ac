#pragma once

#include <cstdint>
#include <optional>

#include "rlpp/master.hpp"
#include "rlpp/plan.hpp"

namespace rlpp {

struct RoundingStats {
  int m = 0;
  double alpha = 0.0;         // fraction of replications with cost <= B
  double best_welfare = 0.0;  // among within-budget replications
  double eta = 0.0;           // best_welfare / master objective
  double mean_cost = 0.0;
  double mean_welfare = 0.0;
  double cost_stderr = 0.0;
  double welfare_stderr = 0.0;
};

// One replication of the rounding / re-assignment / aggregation pipeline.
// Deterministic in (fractional solution, seed): per line, at most one of its
// columns is drawn with probability equal to its weight (cumulative scan in
// pool order); multiply-assigned passengers keep their max-value line (ties
// to the lower id); emptied lines close; open same-route lines merge by a
// left fold over ascending ids, summing frequencies.
LinePlan round_once(const FractionalSolution& fractional,
                    const Instance& instance, const InstanceIndex& index,
                    std::uint64_t seed);

// Same replication with the raw draw and the pre-aggregation plan exposed,
// for property checks on the re-assignment and aggregation steps.
struct RoundTrace {
  std::vector<int> chosen;  // per line position: fractional-column index or -1
  LinePlan before_aggregation;
  LinePlan plan;
};
RoundTrace round_once_traced(const FractionalSolution& fractional,
                             const Instance& instance,
                             const InstanceIndex& index, std::uint64_t seed);

// Strict total order on plans: welfare (descending), then cost, open
// lines, assignment, and finally the replication seed. best_of_m returns
// the minimum under this order among within-budget replications, which
// makes the winner independent of evaluation order.
bool plan_precedes(const LinePlan& a, const LinePlan& b);

// Runs m independent replications with counter-derived seeds and returns
// the best within-budget plan (nullopt when no replication respects the
// budget) plus aggregate statistics. The result does not depend on the
// order replications are evaluated in.
std::pair<std::optional<LinePlan>, RoundingStats> best_of_m(
    const FractionalSolution& fractional, const Instance& instance,
    const InstanceIndex& index, int m, std::uint64_t seed);

// Empirical probability that a replication's cost exceeds
// B(1-eps)(1+delta), over m counter-seeded replications.
double budget_tail_check(const FractionalSolution& fractional,
                         const Instance& instance, const InstanceIndex& index,
                         int m, double delta, std::uint64_t seed);

}  // namespace rlpp
