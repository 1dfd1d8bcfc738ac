#include "rlpp/interval_selection.hpp"

#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace rlpp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Arc {
  int to;
  int rev;        // index of the reverse arc in graph[to]
  int cap;        // residual capacity
  double cost;
  int candidate;  // candidate index carried by forward interval arcs, else -1
};

class FlowGraph {
 public:
  explicit FlowGraph(int nodes) : adj_(nodes) {}

  void add_arc(int u, int v, int cap, double cost, int candidate = -1) {
    adj_[u].push_back({v, static_cast<int>(adj_[v].size()), cap, cost, candidate});
    adj_[v].push_back({u, static_cast<int>(adj_[u].size()) - 1, 0, -cost, -1});
  }

  std::vector<std::vector<Arc>> adj_;
};

}  // namespace

IntervalSelection solve_capacitated_interval_selection(
    int route_length, const std::vector<IntervalCandidate>& candidates,
    int capacity) {
  if (route_length < 1)
    throw std::invalid_argument("route length must be >= 1");
  if (capacity < 1) throw std::invalid_argument("capacity must be >= 1");

  for (const auto& c : candidates) {
    if (c.range.empty() || c.range.first < 0 || c.range.last >= route_length)
      throw std::invalid_argument(
          "candidate " + std::to_string(c.key) +
          " has an invalid sub-route [" + std::to_string(c.range.first) +
          ", " + std::to_string(c.range.last) + "]");
  }

  // Nodes 0..route_length mark the boundaries between edge positions. Chain
  // arcs carry spare capacity at zero cost; each positive-weight candidate
  // becomes a unit arc spanning its range at cost -weight. A min-cost flow
  // of value `capacity` from 0 to route_length selects a maximum-weight
  // feasible set; integer capacities keep the flow (and the selection) 0/1.
  const int source = 0;
  const int sink = route_length;
  FlowGraph g(route_length + 1);
  for (int i = 0; i < route_length; ++i) g.add_arc(i, i + 1, capacity, 0.0);
  std::vector<int> arc_of_candidate(candidates.size(), -1);
  for (size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    if (c.weight <= 0.0) continue;
    arc_of_candidate[i] = static_cast<int>(g.adj_[c.range.first].size());
    g.add_arc(c.range.first, c.range.last + 1, 1, -c.weight,
              static_cast<int>(i));
  }

  const int n = route_length + 1;
  // Initial potentials: shortest distances by a single left-to-right pass
  // (every arc points forward).
  std::vector<double> pot(n, kInf);
  pot[source] = 0.0;
  for (int u = 0; u < n; ++u) {
    if (pot[u] == kInf) continue;
    for (const Arc& a : g.adj_[u])
      if (a.cap > 0 && pot[u] + a.cost < pot[a.to]) pot[a.to] = pot[u] + a.cost;
  }

  std::vector<double> dist(n);
  std::vector<int> prev_node(n), prev_arc(n);
  int pushed = 0;
  while (pushed < capacity) {
    // Dijkstra on reduced costs.
    std::fill(dist.begin(), dist.end(), kInf);
    dist[source] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
      auto [du, u] = heap.top();
      heap.pop();
      if (du > dist[u]) continue;
      for (size_t k = 0; k < g.adj_[u].size(); ++k) {
        const Arc& a = g.adj_[u][k];
        if (a.cap <= 0) continue;
        const double nd = du + a.cost + pot[u] - pot[a.to];
        if (nd < dist[a.to] - 1e-15) {
          dist[a.to] = nd;
          prev_node[a.to] = u;
          prev_arc[a.to] = static_cast<int>(k);
          heap.emplace(nd, a.to);
        }
      }
    }
    if (dist[sink] == kInf) break;
    const double path_cost = dist[sink] + pot[sink] - pot[source];
    if (path_cost >= -1e-12) break;  // no improving augmentation left

    for (int v = 0; v < n; ++v)
      pot[v] += dist[v] == kInf ? dist[sink] : dist[v];

    int bottleneck = capacity - pushed;
    for (int v = sink; v != source; v = prev_node[v])
      bottleneck = std::min(bottleneck, g.adj_[prev_node[v]][prev_arc[v]].cap);
    for (int v = sink; v != source; v = prev_node[v]) {
      Arc& a = g.adj_[prev_node[v]][prev_arc[v]];
      a.cap -= bottleneck;
      g.adj_[a.to][a.rev].cap += bottleneck;
    }
    pushed += bottleneck;
  }

  IntervalSelection result;
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (arc_of_candidate[i] < 0) continue;
    const Arc& a = g.adj_[candidates[i].range.first][arc_of_candidate[i]];
    if (a.cap == 0) {  // unit arc saturated => selected
      result.selected.push_back(candidates[i].key);
      result.objective += candidates[i].weight;
    }
  }
  return result;
}

}  // namespace rlpp
