#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rlpp {

using NodeId = int;
using EdgeId = int;
using LineId = int;
using PassengerId = int;

struct NetworkEdge {
  NodeId u = 0;
  NodeId v = 0;
  double cost = 0.0;  // travel time

  bool operator==(const NetworkEdge&) const = default;
};

// Undirected road network. Edge ids are indices into `edges`.
struct Network {
  int node_count = 0;
  std::vector<NetworkEdge> edges;
  std::vector<std::array<double, 2>> node_coords;  // empty when absent

  bool has_coords() const { return !node_coords.empty(); }
  double min_edge_cost() const;

  bool operator==(const Network&) const = default;
};

// A bus route (ordered walk of consecutive edges) at a fixed frequency.
struct Line {
  LineId id = 0;
  std::vector<EdgeId> route;  // consecutive; ids index network edges when a
                              // network is present, otherwise abstract
  int frequency = 1;
  double cost = 0.0;
  std::optional<double> start_time;  // scheduled mode only

  int num_edges() const { return static_cast<int>(route.size()); }

  bool operator==(const Line&) const = default;
};

struct Passenger {
  PassengerId id = 0;
  NodeId source = 0;
  NodeId dest = 0;
  std::optional<double> request_time;  // scheduled mode only

  bool operator==(const Passenger&) const = default;
};

// Contiguous block of a line's route, as inclusive edge-position indices.
struct SubRoute {
  int first = 0;
  int last = -1;  // last < first means empty

  bool empty() const { return last < first; }
  int length() const { return empty() ? 0 : last - first + 1; }
  bool contains(int pos) const { return pos >= first && pos <= last; }

  bool operator==(const SubRoute&) const = default;
};

// Best trip option matching a passenger to a line: its value and the block
// of the route the passenger occupies. Absence of an entry means the
// passenger rides car-only for that line (value 0).
struct ValueEntry {
  PassengerId passenger = 0;
  LineId line = 0;
  double value = 0.0;
  SubRoute sub_route;

  bool operator==(const ValueEntry&) const = default;
};

struct Instance {
  std::vector<Line> lines;
  std::vector<Passenger> passengers;
  std::vector<ValueEntry> values;
  double budget = 0.0;
  int capacity = 1;  // per bus, per edge
  std::optional<Network> network;
  std::optional<double> max_route_cost;  // D, when configured
  std::map<std::string, double> metadata;

  bool operator==(const Instance&) const = default;
};

struct Violation {
  std::string location;  // e.g. "line 3", "value[7]"
  std::string message;
};

// Reports every invariant violation; an empty list means the instance is
// valid. Violations are data, not failures.
std::vector<Violation> validate_instance(const Instance& instance);

// Node sequence visited by a route (route.size() + 1 nodes). Throws if the
// route is empty or not consecutive. Requires a network.
std::vector<NodeId> route_nodes(const Network& network,
                                const std::vector<EdgeId>& route);

// Total traversal cost of a route.
double route_cost(const Network& network, const std::vector<EdgeId>& route);

// Fast lookups over an immutable instance. Build once, read from anywhere.
class InstanceIndex {
 public:
  explicit InstanceIndex(const Instance& instance);

  int num_lines() const { return static_cast<int>(line_ids_.size()); }
  int num_passengers() const { return static_cast<int>(passenger_ids_.size()); }

  int line_pos(LineId id) const;            // -1 if unknown
  int passenger_pos(PassengerId id) const;  // -1 if unknown

  // Value entries covering a line, ordered by passenger id.
  const std::vector<const ValueEntry*>& entries_for_line(int line_pos) const {
    return by_line_[line_pos];
  }

  // nullptr when the passenger is not covered by the line.
  const ValueEntry* entry(LineId line, PassengerId passenger) const;

  // Groups of line positions sharing an identical route, each sorted by
  // frequency then id; only groups of size >= 2.
  const std::vector<std::vector<int>>& same_route_groups() const {
    return same_route_groups_;
  }

  // Position of the instance line with this exact route and frequency,
  // -1 if absent.
  int find_line(const std::vector<EdgeId>& route, int frequency) const;

 private:
  const Instance* instance_;
  std::vector<LineId> line_ids_;
  std::vector<PassengerId> passenger_ids_;
  std::map<LineId, int> line_pos_;
  std::map<PassengerId, int> passenger_pos_;
  std::vector<std::vector<const ValueEntry*>> by_line_;
  std::map<std::pair<LineId, PassengerId>, const ValueEntry*> entry_map_;
  std::vector<std::vector<int>> same_route_groups_;
  std::map<std::vector<EdgeId>, std::vector<int>> route_map_;
};

}  // namespace rlpp
