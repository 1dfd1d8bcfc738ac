#include "rlpp/pricing.hpp"

#include <cmath>
#include <stdexcept>

#include "rlpp/interval_selection.hpp"

namespace rlpp {

namespace {

Column build_column(const Instance& instance, const InstanceIndex& index,
                    int line_pos, const std::vector<const ValueEntry*>& entries,
                    const std::vector<int>& selected) {
  const Line& line = instance.lines[line_pos];
  Column col;
  col.line = line.id;
  col.edge_use.assign(line.route.size(), 0);
  for (int k : selected) {
    const ValueEntry* e = entries[k];
    col.passengers.push_back(e->passenger);
    col.welfare += e->value;
    for (int pos = e->sub_route.first; pos <= e->sub_route.last; ++pos)
      ++col.edge_use[pos];
  }
  return col;
}

}  // namespace

std::optional<Column> price_line(const Instance& instance,
                                 const InstanceIndex& index, int line_pos,
                                 const DualPrices& duals, double tol) {
  const Line& line = instance.lines[line_pos];
  const auto& entries = index.entries_for_line(line_pos);
  if (entries.empty()) return std::nullopt;

  std::vector<IntervalCandidate> candidates;
  candidates.reserve(entries.size());
  for (size_t k = 0; k < entries.size(); ++k) {
    const ValueEntry* e = entries[k];
    const int p_pos = index.passenger_pos(e->passenger);
    if (p_pos < 0)
      throw std::runtime_error("value entry references unknown passenger " +
                               std::to_string(e->passenger));
    const double lambda = p_pos < static_cast<int>(duals.lambda.size())
                              ? duals.lambda[p_pos]
                              : 0.0;
    candidates.push_back(
        {static_cast<int>(k), e->sub_route, e->value - lambda});
  }

  const int cap = instance.capacity * line.frequency;
  const auto selection = solve_capacitated_interval_selection(
      line.num_edges(), candidates, cap);

  const double q = line_pos < static_cast<int>(duals.q.size())
                       ? duals.q[line_pos]
                       : 0.0;
  if (selection.objective <= q + duals.alpha * line.cost + tol)
    return std::nullopt;
  return build_column(instance, index, line_pos, entries, selection.selected);
}

std::optional<Column> greedy_column(const Instance& instance,
                                    const InstanceIndex& index, int line_pos) {
  return price_line(instance, index, line_pos, DualPrices{});
}

bool column_feasible(const Instance& instance, const InstanceIndex& index,
                     const Column& column) {
  const int line_pos = index.line_pos(column.line);
  if (line_pos < 0 || column.passengers.empty()) return false;
  const Line& line = instance.lines[line_pos];
  std::vector<int> use(line.route.size(), 0);
  double welfare = 0.0;
  for (PassengerId p : column.passengers) {
    const ValueEntry* e = index.entry(column.line, p);
    if (e == nullptr) return false;
    welfare += e->value;
    for (int pos = e->sub_route.first; pos <= e->sub_route.last; ++pos)
      ++use[pos];
  }
  const long cap = static_cast<long>(instance.capacity) * line.frequency;
  for (size_t i = 0; i < use.size(); ++i) {
    if (use[i] > cap) return false;
    if (i < column.edge_use.size() && use[i] != column.edge_use[i])
      return false;
  }
  return std::abs(welfare - column.welfare) <= 1e-9 * (1.0 + welfare);
}

}  // namespace rlpp
