#include "rlpp/plan.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace rlpp {

WelfareCheck welfare_of(const Instance& instance, const InstanceIndex& index,
                        const LinePlan& plan) {
  WelfareCheck check;

  std::map<LineId, const OpenLine*> open_of_member;
  for (const auto& open : plan.open_lines) {
    check.cost += open.cost;
    for (LineId member : open.members) {
      if (index.line_pos(member) < 0)
        throw std::runtime_error("plan opens unknown line " +
                                 std::to_string(member));
      open_of_member[member] = &open;
    }
  }

  // Per open line, usage count for each route position.
  std::map<const OpenLine*, std::vector<int>> usage;
  std::set<PassengerId> seen;

  for (const auto& a : plan.assignment) {
    if (!seen.insert(a.passenger).second) check.single_line_ok = false;
    auto it = open_of_member.find(a.line);
    if (it == open_of_member.end())
      throw std::runtime_error("passenger " + std::to_string(a.passenger) +
                               " assigned to a line that is not open");
    const ValueEntry* entry = index.entry(a.line, a.passenger);
    if (entry == nullptr)
      throw std::runtime_error("passenger " + std::to_string(a.passenger) +
                               " not covered by line " +
                               std::to_string(a.line));
    check.welfare += entry->value;

    const OpenLine* open = it->second;
    auto& use = usage[open];
    if (use.empty()) {
      const int pos = index.line_pos(open->line);
      use.assign(instance.lines[pos].route.size(), 0);
    }
    for (int e = entry->sub_route.first; e <= entry->sub_route.last; ++e) {
      if (e < 0 || e >= static_cast<int>(use.size()))
        throw std::runtime_error("sub-route outside route for passenger " +
                                 std::to_string(a.passenger));
      ++use[e];
    }
  }

  for (const auto& [open, use] : usage) {
    const long cap = static_cast<long>(instance.capacity) * open->frequency;
    for (int u : use)
      if (u > cap) check.capacity_ok = false;
  }

  check.within_budget = check.cost <= instance.budget + 1e-9;
  return check;
}

WelfareCheck welfare_of(const Instance& instance, const LinePlan& plan) {
  InstanceIndex index(instance);
  return welfare_of(instance, index, plan);
}

}  // namespace rlpp
