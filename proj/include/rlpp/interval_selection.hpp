#pragma once

#include <vector>

#include "rlpp/instance.hpp"

namespace rlpp {

struct IntervalCandidate {
  int key = 0;  // caller-defined handle, reported back on selection
  SubRoute range;
  double weight = 0.0;
};

struct IntervalSelection {
  std::vector<int> selected;  // keys, in candidate order
  double objective = 0.0;     // sum of selected weights
};

// Maximum-weight selection of interval candidates on a line of
// `route_length` edge positions, with at most `capacity` selected intervals
// covering any single position. Exact and integral by construction: the
// problem is solved as a min-cost flow along the edge axis (the constraint
// matrix has consecutive ones, so the flow optimum is an optimal 0/1
// selection). Candidates with weight <= 0 are never selected.
//
// Throws std::invalid_argument on an empty or out-of-bounds range.
IntervalSelection solve_capacitated_interval_selection(
    int route_length, const std::vector<IntervalCandidate>& candidates,
    int capacity);

}  // namespace rlpp
