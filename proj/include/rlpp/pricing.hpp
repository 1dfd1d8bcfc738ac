#pragma once

#include <optional>
#include <vector>

#include "rlpp/instance.hpp"

namespace rlpp {

// Optimal duals of the restricted master. q and lambda are aligned with
// instance.lines / instance.passengers order.
struct DualPrices {
  double alpha = 0.0;          // budget constraint
  std::vector<double> q;       // one-set-per-line constraints
  std::vector<double> lambda;  // one-line-per-passenger constraints
};

// A configuration-LP variable: one feasible passenger set for one line.
struct Column {
  LineId line = 0;
  std::vector<PassengerId> passengers;  // sorted, nonempty
  double welfare = 0.0;                 // sum of member values on this line
  std::vector<int> edge_use;            // usage per route position

  bool operator==(const Column&) const = default;
};

inline constexpr double kPricingTol = 1e-7;

// Separation oracle for one line: maximizes the reduced value
// sum_{p in S} (v_lp - lambda_p) over the line's feasible sets. Returns the
// violated column when the maximum exceeds q_l + alpha * c_l + tol, or
// nullopt as the certificate that every constraint of the line is satisfied.
// Members of a returned column all have strictly positive reduced value.
std::optional<Column> price_line(const Instance& instance,
                                 const InstanceIndex& index, int line_pos,
                                 const DualPrices& duals,
                                 double tol = kPricingTol);

// The warm-start column: best feasible set under zero duals (max welfare).
std::optional<Column> greedy_column(const Instance& instance,
                                    const InstanceIndex& index, int line_pos);

// True when the column's passenger set is feasible for its line (capacity
// per route position, covered passengers only) and its cached fields match.
bool column_feasible(const Instance& instance, const InstanceIndex& index,
                     const Column& column);

}  // namespace rlpp
