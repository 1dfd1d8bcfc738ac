#include "rlpp/values.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace rlpp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

CarTimes::CarTimes(const Network& network) : n_(network.node_count) {
  dist_.assign(static_cast<size_t>(n_) * n_, kInf);

  std::vector<std::vector<std::pair<NodeId, double>>> adj(n_);
  for (const auto& e : network.edges) {
    adj[e.u].emplace_back(e.v, e.cost);
    adj[e.v].emplace_back(e.u, e.cost);
  }

  using Item = std::pair<double, NodeId>;
  for (NodeId s = 0; s < n_; ++s) {
    double* d = &dist_[static_cast<size_t>(s) * n_];
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    d[s] = 0.0;
    heap.emplace(0.0, s);
    while (!heap.empty()) {
      auto [du, u] = heap.top();
      heap.pop();
      if (du > d[u]) continue;
      for (auto [v, w] : adj[u]) {
        if (du + w < d[v]) {
          d[v] = du + w;
          heap.emplace(d[v], v);
        }
      }
    }
  }
}

std::optional<ValueEntry> compute_passenger_line_value(
    const Network& network, const CarTimes& times, const Line& line,
    const Passenger& passenger, const ValueParams& params) {
  const double t_star = times.at(passenger.source, passenger.dest);
  if (!std::isfinite(t_star)) {
    throw std::runtime_error(
        "no car route between node " + std::to_string(passenger.source) +
        " and node " + std::to_string(passenger.dest));
  }

  const std::vector<NodeId> nodes = route_nodes(network, line.route);
  const int n_stops = static_cast<int>(nodes.size());

  // Prefix sums of bus travel time along the route; bus_time[i] is the time
  // from the route start to stop i. Doubles as the line schedule offset in
  // scheduled mode.
  std::vector<double> bus_time(n_stops, 0.0);
  for (int i = 1; i < n_stops; ++i)
    bus_time[i] = bus_time[i - 1] + network.edges[line.route[i - 1]].cost;

  double best_value = 0.0;
  SubRoute best_range;
  bool found = false;

  for (int a = 0; a < n_stops; ++a) {
    const double access = times.at(passenger.source, nodes[a]);
    if (!std::isfinite(access)) continue;
    if (params.scheduled) {
      if (!line.start_time || !passenger.request_time) continue;
      // Only boardable if the passenger reaches stop a before the bus does.
      if (*passenger.request_time + access > *line.start_time + bus_time[a] + 1e-9)
        continue;
    }
    for (int b = a + 1; b < n_stops; ++b) {
      const double egress = times.at(nodes[b], passenger.dest);
      if (!std::isfinite(egress)) continue;
      const double t_car = access + egress;
      const double trip_time = t_car + (bus_time[b] - bus_time[a]);

      double value = 0.0;
      switch (params.model) {
        case ValueModel::kPiecewise:
          if (trip_time < (1.0 + params.alpha) * t_star &&
              t_car < params.beta * t_star)
            value = params.beta * t_star - t_car;
          break;
        case ValueModel::kCarSaving:
          if (trip_time <= params.beta * t_star) value = t_star - t_car;
          break;
      }
      if (value <= 0.0) continue;

      const SubRoute range{a, b - 1};
      const bool better =
          !found || value > best_value + 1e-12 ||
          (value > best_value - 1e-12 &&
           (range.length() < best_range.length() ||
            (range.length() == best_range.length() &&
             range.first < best_range.first)));
      if (better) {
        best_value = value;
        best_range = range;
        found = true;
      }
    }
  }

  if (!found) return std::nullopt;
  return ValueEntry{passenger.id, line.id, best_value, best_range};
}

void compute_all_values(Instance& instance, const ValueParams& params) {
  if (!instance.network)
    throw std::runtime_error("instance has no network to compute values from");
  const CarTimes times(*instance.network);
  instance.values.clear();
  for (const auto& line : instance.lines) {
    for (const auto& p : instance.passengers) {
      auto entry = compute_passenger_line_value(*instance.network, times, line,
                                                p, params);
      if (entry) instance.values.push_back(*entry);
    }
  }
}

}  // namespace rlpp
