#include "rlpp/exact.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

namespace rlpp {

namespace {

struct AssignCandidate {
  LineId line;
  int open_idx;  // index into the open-set usage tables
  double value;
  SubRoute range;
};

// Exhaustive max-welfare assignment of passengers to a fixed set of open
// lines, with branch-and-bound pruning on the per-passenger value bound.
struct AssignmentSearch {
  const Instance& instance;
  std::vector<std::vector<AssignCandidate>> options;  // per passenger pos
  std::vector<double> suffix_bound;
  std::vector<std::vector<int>> usage;  // per open line, per route position
  std::vector<long> caps;               // per open line
  std::vector<LineId> chosen;           // per passenger pos, -1 = car only
  std::vector<LineId> best_chosen;
  double best = -1.0;
  double current = 0.0;
  long nodes = 0;

  explicit AssignmentSearch(const Instance& inst) : instance(inst) {}

  // Callers may pre-set `best` to an external lower bound; solutions that
  // do not beat it are pruned and best_chosen stays empty.
  void run() {
    const int n = static_cast<int>(options.size());
    suffix_bound.assign(n + 1, 0.0);
    for (int i = n - 1; i >= 0; --i) {
      double mx = 0.0;
      for (const auto& c : options[i]) mx = std::max(mx, c.value);
      suffix_bound[i] = suffix_bound[i + 1] + mx;
    }
    chosen.assign(n, -1);
    best_chosen = chosen;
    dfs(0);
  }

  bool fits(const AssignCandidate& c) const {
    const auto& use = usage[c.open_idx];
    for (int e = c.range.first; e <= c.range.last; ++e)
      if (use[e] + 1 > caps[c.open_idx]) return false;
    return true;
  }

  void dfs(int p) {
    ++nodes;
    if (current + suffix_bound[p] <= best + 1e-12) return;
    if (p == static_cast<int>(options.size())) {
      best = current;
      best_chosen = chosen;
      return;
    }
    for (const auto& c : options[p]) {
      if (!fits(c)) continue;
      for (int e = c.range.first; e <= c.range.last; ++e) ++usage[c.open_idx][e];
      chosen[p] = c.line;
      current += c.value;
      dfs(p + 1);
      current -= c.value;
      chosen[p] = -1;
      for (int e = c.range.first; e <= c.range.last; ++e) --usage[c.open_idx][e];
    }
    dfs(p + 1);  // car-only option
  }
};

// Builds the per-passenger option lists for a set of open line positions.
AssignmentSearch make_search(const Instance& instance,
                             const InstanceIndex& index,
                             const std::vector<int>& open_positions) {
  AssignmentSearch search(instance);
  search.options.resize(index.num_passengers());
  search.usage.resize(open_positions.size());
  search.caps.resize(open_positions.size());
  for (size_t k = 0; k < open_positions.size(); ++k) {
    const Line& line = instance.lines[open_positions[k]];
    search.usage[k].assign(line.route.size(), 0);
    search.caps[k] = static_cast<long>(instance.capacity) * line.frequency;
    for (const ValueEntry* e : index.entries_for_line(open_positions[k])) {
      if (e->value <= 0.0) continue;
      const int p_pos = index.passenger_pos(e->passenger);
      search.options[p_pos].push_back(
          {line.id, static_cast<int>(k), e->value, e->sub_route});
    }
  }
  for (auto& opts : search.options) {
    std::sort(opts.begin(), opts.end(),
              [](const AssignCandidate& a, const AssignCandidate& b) {
                return a.value != b.value ? a.value > b.value
                                          : a.line < b.line;
              });
  }
  return search;
}

LinePlan plan_from_search(const Instance& instance, const InstanceIndex& index,
                          const AssignmentSearch& search) {
  LinePlan plan;
  std::map<LineId, int> line_passengers;
  for (int p = 0; p < static_cast<int>(search.best_chosen.size()); ++p) {
    const LineId line = search.best_chosen[p];
    if (line < 0) continue;
    const PassengerId pid = instance.passengers[p].id;
    const ValueEntry* e = index.entry(line, pid);
    plan.assignment.push_back({pid, line});
    plan.welfare += e->value;
    ++line_passengers[line];
  }
  for (const auto& [line_id, count] : line_passengers) {
    const Line& line = instance.lines[index.line_pos(line_id)];
    plan.open_lines.push_back({line_id, {line_id}, line.frequency, line.cost});
    plan.cost += line.cost;
  }
  plan.within_budget = plan.cost <= instance.budget + 1e-9;
  return plan;
}

}  // namespace

ExactResult brute_force_opt(const Instance& instance,
                            const EnumLimits& limits) {
  const auto t0 = std::chrono::steady_clock::now();
  const int L = static_cast<int>(instance.lines.size());
  const int N = static_cast<int>(instance.passengers.size());
  if (L > limits.max_lines)
    throw LimitError("brute_force_opt: " + std::to_string(L) +
                     " lines exceed the limit of " +
                     std::to_string(limits.max_lines));
  if (N > limits.max_passengers)
    throw LimitError("brute_force_opt: " + std::to_string(N) +
                     " passengers exceed the limit of " +
                     std::to_string(limits.max_passengers));

  const InstanceIndex index(instance);
  ExactResult result;
  result.optimal_welfare = 0.0;
  result.plan.within_budget = instance.budget >= 0.0;

  for (unsigned mask = 0; mask < (1u << L); ++mask) {
    double cost = 0.0;
    std::vector<int> open;
    for (int i = 0; i < L; ++i) {
      if (mask & (1u << i)) {
        cost += instance.lines[i].cost;
        open.push_back(i);
      }
    }
    if (cost > instance.budget + 1e-9) continue;

    AssignmentSearch search = make_search(instance, index, open);
    search.best = result.optimal_welfare;  // inherit the global bound
    search.run();
    result.nodes_explored += search.nodes;
    if (search.best > result.optimal_welfare + 1e-12) {
      result.optimal_welfare = search.best;
      result.plan = plan_from_search(instance, index, search);
    }
  }

  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return result;
}

double welfare_oracle_w(const Instance& instance,
                        const std::vector<LineId>& open_lines,
                        const EnumLimits& limits) {
  const int N = static_cast<int>(instance.passengers.size());
  if (static_cast<int>(open_lines.size()) > limits.max_lines)
    throw LimitError("welfare_oracle_w: open set exceeds the line limit");
  if (N > limits.max_passengers)
    throw LimitError("welfare_oracle_w: passenger count exceeds the limit");

  const InstanceIndex index(instance);
  std::vector<int> open;
  for (LineId id : open_lines) {
    const int pos = index.line_pos(id);
    if (pos < 0)
      throw std::runtime_error("welfare_oracle_w: unknown line " +
                               std::to_string(id));
    open.push_back(pos);
  }
  std::sort(open.begin(), open.end());
  open.erase(std::unique(open.begin(), open.end()), open.end());

  AssignmentSearch search = make_search(instance, index, open);
  search.run();
  return std::max(search.best, 0.0);
}

std::vector<std::vector<PassengerId>> enumerate_feasible_sets(
    const Instance& instance, LineId line, const EnumLimits& limits) {
  const InstanceIndex index(instance);
  const int pos = index.line_pos(line);
  if (pos < 0)
    throw std::runtime_error("enumerate_feasible_sets: unknown line " +
                             std::to_string(line));
  std::vector<const ValueEntry*> covered;
  for (const ValueEntry* e : index.entries_for_line(pos))
    if (e->value > 0.0) covered.push_back(e);
  if (static_cast<int>(covered.size()) > limits.max_covered_per_line)
    throw LimitError("enumerate_feasible_sets: " +
                     std::to_string(covered.size()) +
                     " covered passengers exceed the limit of " +
                     std::to_string(limits.max_covered_per_line));

  const Line& l = instance.lines[pos];
  const long cap = static_cast<long>(instance.capacity) * l.frequency;
  std::vector<int> usage(l.route.size(), 0);
  std::vector<PassengerId> current;
  std::vector<std::vector<PassengerId>> out;

  auto dfs = [&](auto&& self, size_t i) -> void {
    if (i == covered.size()) {
      if (!current.empty()) out.push_back(current);
      return;
    }
    const ValueEntry* e = covered[i];
    bool fits = true;
    for (int k = e->sub_route.first; k <= e->sub_route.last; ++k)
      if (usage[k] + 1 > cap) fits = false;
    if (fits) {
      for (int k = e->sub_route.first; k <= e->sub_route.last; ++k) ++usage[k];
      current.push_back(e->passenger);
      self(self, i + 1);
      current.pop_back();
      for (int k = e->sub_route.first; k <= e->sub_route.last; ++k) --usage[k];
    }
    self(self, i + 1);
  };
  dfs(dfs, 0);

  std::sort(out.begin(), out.end(),
            [](const std::vector<PassengerId>& a,
               const std::vector<PassengerId>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return out;
}

FractionalSolution config_lp_full(const Instance& instance, double eps,
                                  const EnumLimits& limits) {
  if (eps < 0.0 || eps > 1.0)
    throw std::invalid_argument("eps must lie in [0, 1]");
  const InstanceIndex index(instance);

  std::vector<Column> columns;
  for (const auto& line : instance.lines) {
    for (const auto& set : enumerate_feasible_sets(instance, line.id, limits)) {
      Column col;
      col.line = line.id;
      col.passengers = set;
      col.edge_use.assign(line.route.size(), 0);
      for (PassengerId p : set) {
        const ValueEntry* e = index.entry(line.id, p);
        col.welfare += e->value;
        for (int k = e->sub_route.first; k <= e->sub_route.last; ++k)
          ++col.edge_use[k];
      }
      columns.push_back(std::move(col));
    }
  }

  const double budget_rhs = std::max(0.0, instance.budget * (1.0 - eps));
  MasterResult res = solve_columns_lp(instance, index, columns, budget_rhs);

  FractionalSolution out;
  out.eps = eps;
  out.converged = true;
  out.objective = res.objective;
  out.duals = std::move(res.duals);
  out.columns_generated = static_cast<int>(columns.size());
  for (size_t j = 0; j < columns.size(); ++j) {
    if (res.weights[j] > 1e-12)
      out.columns.push_back({std::move(columns[j]), res.weights[j]});
  }
  out.rounds = 1;
  return out;
}

}  // namespace rlpp
