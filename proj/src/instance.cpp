#include "rlpp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace rlpp {

double Network::min_edge_cost() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& e : edges) m = std::min(m, e.cost);
  return m;
}

std::vector<NodeId> route_nodes(const Network& network,
                                const std::vector<EdgeId>& route) {
  if (route.empty()) throw std::invalid_argument("route is empty");
  for (EdgeId e : route) {
    if (e < 0 || e >= static_cast<EdgeId>(network.edges.size()))
      throw std::invalid_argument("route references unknown edge " +
                                  std::to_string(e));
  }
  // Chain the walk from a candidate start node; empty result on failure.
  const auto chain_from = [&](NodeId start) {
    std::vector<NodeId> nodes;
    nodes.reserve(route.size() + 1);
    nodes.push_back(start);
    NodeId at = start;
    for (EdgeId e : route) {
      const auto& edge = network.edges[e];
      if (edge.u == at) {
        at = edge.v;
      } else if (edge.v == at) {
        at = edge.u;
      } else {
        return std::vector<NodeId>{};
      }
      nodes.push_back(at);
    }
    return nodes;
  };

  // With parallel edges or backtracking walks the first edge's orientation
  // can be ambiguous, so try u first and fall back to v.
  const auto& first = network.edges[route[0]];
  auto nodes = chain_from(first.u);
  if (nodes.empty()) nodes = chain_from(first.v);
  if (nodes.empty())
    throw std::invalid_argument("route is not a consecutive walk");
  return nodes;
}

double route_cost(const Network& network, const std::vector<EdgeId>& route) {
  double total = 0.0;
  for (EdgeId e : route) total += network.edges[e].cost;
  return total;
}

namespace {

void check_network(const Instance& inst, std::vector<Violation>& out) {
  const Network& net = *inst.network;
  if (net.node_count <= 0)
    out.push_back({"network", "node count must be positive"});
  const double tau_min = net.min_edge_cost();
  if (!net.edges.empty() && tau_min <= 0.0)
    out.push_back({"network", "minimum edge cost must be > 0"});
  for (size_t i = 0; i < net.edges.size(); ++i) {
    const auto& e = net.edges[i];
    if (e.u < 0 || e.u >= net.node_count || e.v < 0 || e.v >= net.node_count)
      out.push_back({"network edge " + std::to_string(i),
                     "endpoint outside node range"});
    if (e.cost < tau_min - 1e-12)
      out.push_back({"network edge " + std::to_string(i),
                     "edge cost below minimum"});
  }
  if (!net.node_coords.empty() &&
      static_cast<int>(net.node_coords.size()) != net.node_count)
    out.push_back({"network", "coordinate count does not match node count"});
}

}  // namespace

std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;

  if (inst.budget < 0.0) out.push_back({"instance", "budget B must be >= 0"});
  if (inst.capacity < 1) out.push_back({"instance", "capacity C must be >= 1"});
  if (inst.network) check_network(inst, out);

  std::set<LineId> line_ids;
  for (const auto& line : inst.lines) {
    const std::string loc = "line " + std::to_string(line.id);
    if (!line_ids.insert(line.id).second)
      out.push_back({loc, "duplicate line id"});
    if (line.route.empty()) out.push_back({loc, "route is empty"});
    if (line.frequency < 1) out.push_back({loc, "frequency must be >= 1"});
    if (line.cost < 0.0) out.push_back({loc, "cost must be >= 0"});
    if (inst.network && !line.route.empty()) {
      try {
        route_nodes(*inst.network, line.route);
      } catch (const std::exception& e) {
        out.push_back({loc, e.what()});
      }
      if (inst.max_route_cost &&
          route_cost(*inst.network, line.route) > *inst.max_route_cost + 1e-9)
        out.push_back({loc, "route cost exceeds bound D"});
    } else if (!inst.network) {
      for (EdgeId e : line.route)
        if (e < 0) out.push_back({loc, "negative edge id"});
    }
  }

  std::set<PassengerId> passenger_ids;
  for (const auto& p : inst.passengers) {
    const std::string loc = "passenger " + std::to_string(p.id);
    if (!passenger_ids.insert(p.id).second)
      out.push_back({loc, "duplicate passenger id"});
    if (p.source == p.dest)
      out.push_back({loc, "source and destination coincide"});
    if (inst.network) {
      if (p.source < 0 || p.source >= inst.network->node_count)
        out.push_back({loc, "source node outside network"});
      if (p.dest < 0 || p.dest >= inst.network->node_count)
        out.push_back({loc, "destination node outside network"});
    }
  }

  std::map<LineId, const Line*> line_by_id;
  for (const auto& line : inst.lines) line_by_id.emplace(line.id, &line);

  std::set<std::pair<LineId, PassengerId>> seen_pairs;
  for (size_t i = 0; i < inst.values.size(); ++i) {
    const auto& v = inst.values[i];
    const std::string loc = "value[" + std::to_string(i) + "]";
    auto it = line_by_id.find(v.line);
    if (it == line_by_id.end())
      out.push_back({loc, "references unknown line " + std::to_string(v.line)});
    if (!passenger_ids.count(v.passenger))
      out.push_back(
          {loc, "references unknown passenger " + std::to_string(v.passenger)});
    if (!seen_pairs.insert({v.line, v.passenger}).second)
      out.push_back({loc, "duplicate (line, passenger) entry"});
    if (v.value < 0.0) out.push_back({loc, "value must be >= 0"});
    if (v.value > 0.0) {
      if (v.sub_route.empty())
        out.push_back({loc, "positive value requires a nonempty sub-route"});
      else if (it != line_by_id.end() &&
               (v.sub_route.first < 0 ||
                v.sub_route.last >= it->second->num_edges()))
        out.push_back({loc, "sub-route outside the line's route"});
    }
  }

  // Cost and value conditions across lines sharing a route: cost strictly
  // increasing in frequency, subadditive under frequency addition, and
  // values non-decreasing in frequency.
  std::map<std::vector<EdgeId>, std::vector<const Line*>> groups;
  for (const auto& line : inst.lines) groups[line.route].push_back(&line);
  std::map<std::pair<LineId, PassengerId>, double> value_of;
  for (const auto& v : inst.values) value_of[{v.line, v.passenger}] = v.value;

  for (auto& [route, group] : groups) {
    if (group.size() < 2) continue;
    std::sort(group.begin(), group.end(), [](const Line* a, const Line* b) {
      return std::tie(a->frequency, a->id) < std::tie(b->frequency, b->id);
    });
    for (size_t a = 0; a < group.size(); ++a) {
      for (size_t b = a + 1; b < group.size(); ++b) {
        const Line* la = group[a];
        const Line* lb = group[b];
        if (la->frequency < lb->frequency && la->cost >= lb->cost - 1e-12)
          out.push_back({"line " + std::to_string(lb->id),
                         "cost not strictly increasing in frequency vs line " +
                             std::to_string(la->id)});
        // Subadditivity is checkable only when the summed frequency exists.
        for (const Line* lc : group) {
          if (lc->frequency == la->frequency + lb->frequency &&
              la->cost + lb->cost < lc->cost - 1e-9)
            out.push_back({"line " + std::to_string(lc->id),
                           "cost not subadditive across lines " +
                               std::to_string(la->id) + "+" +
                               std::to_string(lb->id)});
        }
        // Value monotonicity in frequency.
        if (la->frequency <= lb->frequency) {
          for (const auto& v : inst.values) {
            if (v.line != la->id || v.value <= 0.0) continue;
            auto itb = value_of.find({lb->id, v.passenger});
            const double vb = itb == value_of.end() ? 0.0 : itb->second;
            if (v.value > vb + 1e-9)
              out.push_back(
                  {"value of passenger " + std::to_string(v.passenger),
                   "decreases from line " + std::to_string(la->id) +
                       " to same-route higher-frequency line " +
                       std::to_string(lb->id)});
          }
        }
      }
    }
  }

  return out;
}

InstanceIndex::InstanceIndex(const Instance& instance) : instance_(&instance) {
  line_ids_.reserve(instance.lines.size());
  for (int i = 0; i < static_cast<int>(instance.lines.size()); ++i) {
    line_ids_.push_back(instance.lines[i].id);
    line_pos_.emplace(instance.lines[i].id, i);
    route_map_[instance.lines[i].route].push_back(i);
  }
  passenger_ids_.reserve(instance.passengers.size());
  for (int i = 0; i < static_cast<int>(instance.passengers.size()); ++i) {
    passenger_ids_.push_back(instance.passengers[i].id);
    passenger_pos_.emplace(instance.passengers[i].id, i);
  }
  by_line_.resize(instance.lines.size());
  for (const auto& v : instance.values) {
    auto it = line_pos_.find(v.line);
    if (it != line_pos_.end()) by_line_[it->second].push_back(&v);
    entry_map_.emplace(std::make_pair(v.line, v.passenger), &v);
  }
  for (auto& vec : by_line_) {
    std::sort(vec.begin(), vec.end(),
              [](const ValueEntry* a, const ValueEntry* b) {
                return a->passenger < b->passenger;
              });
  }
  for (const auto& [route, positions] : route_map_) {
    if (positions.size() < 2) continue;
    auto group = positions;
    std::sort(group.begin(), group.end(), [&](int a, int b) {
      const auto& la = instance.lines[a];
      const auto& lb = instance.lines[b];
      return std::tie(la.frequency, la.id) < std::tie(lb.frequency, lb.id);
    });
    same_route_groups_.push_back(std::move(group));
  }
}

int InstanceIndex::line_pos(LineId id) const {
  auto it = line_pos_.find(id);
  return it == line_pos_.end() ? -1 : it->second;
}

int InstanceIndex::passenger_pos(PassengerId id) const {
  auto it = passenger_pos_.find(id);
  return it == passenger_pos_.end() ? -1 : it->second;
}

const ValueEntry* InstanceIndex::entry(LineId line, PassengerId passenger) const {
  auto it = entry_map_.find({line, passenger});
  return it == entry_map_.end() ? nullptr : it->second;
}

int InstanceIndex::find_line(const std::vector<EdgeId>& route,
                             int frequency) const {
  auto it = route_map_.find(route);
  if (it == route_map_.end()) return -1;
  for (int pos : it->second)
    if (instance_->lines[pos].frequency == frequency) return pos;
  return -1;
}

}  // namespace rlpp
