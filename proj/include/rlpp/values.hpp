#pragma once

#include <optional>
#include <vector>

#include "rlpp/instance.hpp"

namespace rlpp {

// All-pairs shortest car travel times, computed once per network and cached.
class CarTimes {
 public:
  explicit CarTimes(const Network& network);

  // +inf when unreachable.
  double at(NodeId from, NodeId to) const {
    return dist_[static_cast<size_t>(from) * n_ + to];
  }

 private:
  int n_;
  std::vector<double> dist_;
};

// Which trip-value function to evaluate.
enum class ValueModel {
  kPiecewise,   // beta * t_star - t_car, gated on trip time and car time
  kCarSaving,   // t_star - t_car, gated on a detour factor
};

struct ValueParams {
  ValueModel model = ValueModel::kPiecewise;
  double alpha = 0.2;  // trip-duration tolerance (piecewise model)
  double beta = 0.5;   // efficiency gain (piecewise) or detour factor (saving)
  bool scheduled = false;  // enforce request-time/line-schedule feasibility
};

// Best trip option matching the passenger to the line: maximizes the value
// over all O(n_l^2) board/alight pairs. Ties break toward the shortest
// sub-route, then the earliest start. Returns nullopt when every option has
// value 0. Throws when the passenger's source or destination is unreachable.
std::optional<ValueEntry> compute_passenger_line_value(
    const Network& network, const CarTimes& times, const Line& line,
    const Passenger& passenger, const ValueParams& params);

// Runs the evaluator over every (line, passenger) pair of an instance that
// has a network, replacing instance.values.
void compute_all_values(Instance& instance, const ValueParams& params);

}  // namespace rlpp
