#include "rlpp/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "rlpp/rng.hpp"

namespace rlpp {

bool plan_precedes(const LinePlan& a, const LinePlan& b) {
  if (a.welfare != b.welfare) return a.welfare > b.welfare;
  if (a.cost != b.cost) return a.cost < b.cost;
  auto key = [](const LinePlan& p) {
    std::vector<std::tuple<LineId, int>> lines;
    for (const auto& o : p.open_lines) lines.emplace_back(o.line, o.frequency);
    std::vector<std::pair<PassengerId, LineId>> assign;
    for (const auto& x : p.assignment) assign.emplace_back(x.passenger, x.line);
    return std::make_pair(lines, assign);
  };
  const auto ka = key(a), kb = key(b);
  if (ka != kb) return ka < kb;
  return a.seed < b.seed;
}

namespace {

struct Realization {
  // line position -> chosen column (index into fractional.columns), or -1
  std::vector<int> chosen;
};

Realization sample_columns(const FractionalSolution& fractional,
                           const InstanceIndex& index, Rng& rng) {
  // Columns grouped per line, preserving pool order.
  std::vector<std::vector<int>> per_line(index.num_lines());
  for (size_t k = 0; k < fractional.columns.size(); ++k) {
    const int pos = index.line_pos(fractional.columns[k].column.line);
    if (pos < 0)
      throw std::runtime_error("fractional solution references unknown line");
    per_line[pos].push_back(static_cast<int>(k));
  }

  // One categorical draw per line that has any mass, in ascending line
  // position; the residual probability keeps the line closed.
  Realization real;
  real.chosen.assign(index.num_lines(), -1);
  for (int pos = 0; pos < index.num_lines(); ++pos) {
    if (per_line[pos].empty()) continue;
    const double u = rng.uniform();
    double cum = 0.0;
    for (int k : per_line[pos]) {
      cum += fractional.columns[k].weight;
      if (u < cum) {
        real.chosen[pos] = k;
        break;
      }
    }
  }
  return real;
}

LinePlan assemble_plan(const FractionalSolution& fractional,
                       const Instance& instance, const InstanceIndex& index,
                       const Realization& real, std::uint64_t seed,
                       bool aggregate) {
  // Re-assignment: keep the max-value line per passenger, lower id on ties.
  struct Pick {
    double value = -1.0;
    LineId line = 0;
    bool set = false;
  };
  std::map<PassengerId, Pick> picks;
  for (int pos = 0; pos < index.num_lines(); ++pos) {
    const int k = real.chosen[pos];
    if (k < 0) continue;
    const Column& col = fractional.columns[k].column;
    for (PassengerId p : col.passengers) {
      const ValueEntry* e = index.entry(col.line, p);
      if (e == nullptr)
        throw std::runtime_error("column member has no value entry");
      Pick& pick = picks[p];
      if (!pick.set || e->value > pick.value ||
          (e->value == pick.value && col.line < pick.line)) {
        pick = {e->value, col.line, true};
      }
    }
  }

  // Lines that kept at least one passenger stay open.
  std::map<LineId, std::vector<PassengerId>> kept;
  for (const auto& [p, pick] : picks) kept[pick.line].push_back(p);

  LinePlan plan;
  plan.seed = seed;
  if (!aggregate) {
    for (const auto& [line_id, passengers] : kept) {
      const Line& line = instance.lines[index.line_pos(line_id)];
      plan.open_lines.push_back({line_id, {line_id}, line.frequency, line.cost});
    }
  } else {
    // Aggregation: left fold of open same-route lines in ascending id,
    // summing frequencies; the merged cost comes from the instance's cost
    // map when a line with the summed frequency exists, otherwise from the
    // sum of the member costs.
    std::map<std::vector<EdgeId>, std::vector<LineId>> by_route;
    for (const auto& [line_id, passengers] : kept)
      by_route[instance.lines[index.line_pos(line_id)].route].push_back(line_id);
    for (auto& [route, members] : by_route) {
      std::sort(members.begin(), members.end());
      OpenLine open;
      open.line = members.front();
      open.members = members;
      open.frequency = 0;
      open.cost = 0.0;
      for (LineId id : members) {
        const Line& line = instance.lines[index.line_pos(id)];
        if (open.frequency == 0) {
          open.frequency = line.frequency;
          open.cost = line.cost;
          continue;
        }
        const int merged_freq = open.frequency + line.frequency;
        const int existing = index.find_line(route, merged_freq);
        open.cost = existing >= 0 ? instance.lines[existing].cost
                                  : open.cost + line.cost;
        open.frequency = merged_freq;
      }
      plan.open_lines.push_back(std::move(open));
    }
    std::sort(plan.open_lines.begin(), plan.open_lines.end(),
              [](const OpenLine& a, const OpenLine& b) { return a.line < b.line; });
  }

  for (const auto& [p, pick] : picks) {
    plan.assignment.push_back({p, pick.line});
    plan.welfare += pick.value;
  }
  for (const auto& open : plan.open_lines) plan.cost += open.cost;
  plan.within_budget = plan.cost <= instance.budget + 1e-9;
  return plan;
}

}  // namespace

RoundTrace round_once_traced(const FractionalSolution& fractional,
                             const Instance& instance,
                             const InstanceIndex& index, std::uint64_t seed) {
  Rng rng(seed);
  const Realization real = sample_columns(fractional, index, rng);
  RoundTrace trace;
  trace.chosen = real.chosen;
  trace.before_aggregation =
      assemble_plan(fractional, instance, index, real, seed, false);
  trace.plan = assemble_plan(fractional, instance, index, real, seed, true);
  return trace;
}

LinePlan round_once(const FractionalSolution& fractional,
                    const Instance& instance, const InstanceIndex& index,
                    std::uint64_t seed) {
  Rng rng(seed);
  const Realization real = sample_columns(fractional, index, rng);
  return assemble_plan(fractional, instance, index, real, seed, true);
}

std::pair<std::optional<LinePlan>, RoundingStats> best_of_m(
    const FractionalSolution& fractional, const Instance& instance,
    const InstanceIndex& index, int m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");

  RoundingStats stats;
  stats.m = m;
  std::optional<LinePlan> best;
  double sum_cost = 0.0, sum_cost2 = 0.0;
  double sum_welfare = 0.0, sum_welfare2 = 0.0;
  int within = 0;

  for (int i = 0; i < m; ++i) {
    LinePlan plan = round_once(fractional, instance, index,
                               derive_seed(seed, static_cast<std::uint64_t>(i)));
    sum_cost += plan.cost;
    sum_cost2 += plan.cost * plan.cost;
    sum_welfare += plan.welfare;
    sum_welfare2 += plan.welfare * plan.welfare;
    if (plan.within_budget) {
      ++within;
      if (!best || plan_precedes(plan, *best)) best = std::move(plan);
    }
  }

  stats.alpha = static_cast<double>(within) / m;
  stats.mean_cost = sum_cost / m;
  stats.mean_welfare = sum_welfare / m;
  if (m > 1) {
    const double var_c =
        std::max(0.0, (sum_cost2 - m * stats.mean_cost * stats.mean_cost) /
                          (m - 1));
    const double var_w = std::max(
        0.0,
        (sum_welfare2 - m * stats.mean_welfare * stats.mean_welfare) / (m - 1));
    stats.cost_stderr = std::sqrt(var_c / m);
    stats.welfare_stderr = std::sqrt(var_w / m);
  }
  if (best) {
    stats.best_welfare = best->welfare;
    if (fractional.objective > 0.0)
      stats.eta = best->welfare / fractional.objective;
  }
  return {std::move(best), stats};
}

double budget_tail_check(const FractionalSolution& fractional,
                         const Instance& instance, const InstanceIndex& index,
                         int m, double delta, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (delta <= 0.0 || delta > 1.0)
    throw std::invalid_argument("delta must lie in (0, 1]");
  const double threshold =
      instance.budget * (1.0 - fractional.eps) * (1.0 + delta);
  int exceed = 0;
  for (int i = 0; i < m; ++i) {
    const LinePlan plan = round_once(
        fractional, instance, index, derive_seed(seed, static_cast<std::uint64_t>(i)));
    if (plan.cost > threshold + 1e-9) ++exceed;
  }
  return static_cast<double>(exceed) / m;
}

}  // namespace rlpp
