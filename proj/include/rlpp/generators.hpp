#pragma once

#include <cstdint>

#include "rlpp/instance.hpp"

namespace rlpp {

struct SyntheticParams {
  int num_lines = 1000;        // L
  int num_passengers = 5000;   // N
  double budget = 20.0;        // B
  int capacity = 30;           // C
  int route_len_min = 5;
  int route_len_max = 50;
  double coverage = 0.1;       // Bernoulli coverage probability per pair
  double line_cost = 1.0;
  std::uint64_t seed = 0;
};

// Synthetic benchmark instance: value-matrix-only, one frequency-1 line per
// route-length draw, each (line, passenger) pair covered independently with
// a uniform value on a random contiguous block of the route. Deterministic
// in the seed. Draw order: route lengths for all lines first, then coverage
// / value / block start / block length per (line, passenger) pair in line-
// major order.
Instance gen_synthetic(const SyntheticParams& params);

struct SkeletonParams {
  int num_lines = 0;          // L
  double max_route_cost = 0;  // D; lines costing more are resampled
  double cost_per_time = 1.0;
  int waypoints = 4;
  int resample_limit = 1000;  // consecutive failures before giving up
  std::uint64_t seed = 0;
};

// Candidate lines by the skeleton method: each line connects uniformly
// random waypoints by shortest paths. Throws after `resample_limit`
// consecutive rejected draws (disconnected waypoints or routes over D).
std::vector<Line> gen_skeleton_lines(const Network& network,
                                     const SkeletonParams& params);

// Two non-overlapping unit-value lines under budget 2 - eps_gap: the ILP
// opens one line while the relaxation pays for one and a fraction of the
// other, exhibiting the worst-case integrality gap.
Instance gen_gadget_integrality_gap(double eps_gap);

// Three lines and three passengers on unit capacity whose assignment
// welfare violates submodularity.
Instance gen_gadget_nonsubmodular();

// One full-route line with n-1 passengers who each need the whole route at
// unit capacity; the trip-optimal welfare is 1 while per-edge options worth
// 1/2 each would reach (n-1)/2 (recorded in instance metadata).
Instance gen_gadget_trip_optimality(int n);

}  // namespace rlpp
