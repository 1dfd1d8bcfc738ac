#include "rlpp/master.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace rlpp {

namespace {

// Row layout: 0 = budget, 1..L = lines, L+1..L+N = passengers.
class MasterLp {
 public:
  MasterLp(const Instance& instance, const InstanceIndex& index,
           double budget_rhs, const MasterConfig& config)
      : instance_(instance), index_(index) {
    const int L = index.num_lines();
    const int N = index.num_passengers();
    std::vector<double> rhs(1 + L + N, 1.0);
    rhs[0] = std::max(0.0, budget_rhs);
    LpOptions options;
    options.optimality_tol = config.optimality_tol;
    solver_.emplace(std::move(rhs), options);
  }

  void add_column(Column column) {
    const int line_pos = index_.line_pos(column.line);
    if (line_pos < 0)
      throw std::runtime_error("column references unknown line " +
                               std::to_string(column.line));
    std::vector<std::pair<int, double>> entries;
    entries.reserve(column.passengers.size() + 2);
    const double cost = instance_.lines[line_pos].cost;
    if (cost != 0.0) entries.emplace_back(0, cost);
    entries.emplace_back(1 + line_pos, 1.0);
    for (PassengerId p : column.passengers) {
      const int p_pos = index_.passenger_pos(p);
      if (p_pos < 0)
        throw std::runtime_error("column references unknown passenger " +
                                 std::to_string(p));
      entries.emplace_back(1 + index_.num_lines() + p_pos, 1.0);
    }
    solver_->add_column(column.welfare, std::move(entries));
    pool_.push_back(std::move(column));
  }

  LpStatus solve(
      std::optional<std::chrono::steady_clock::time_point> deadline = {}) {
    const LpStatus status = solver_->solve(deadline);
    if (status == LpStatus::kUnbounded)
      throw std::runtime_error("restricted master is unbounded");
    return status;
  }

  double objective() const { return solver_->objective_value(); }

  std::vector<double> weights() const {
    std::vector<double> w(pool_.size());
    for (size_t j = 0; j < pool_.size(); ++j)
      w[j] = std::min(1.0, solver_->primal(static_cast<int>(j)));
    return w;
  }

  DualPrices duals() const {
    const std::vector<double> y = solver_->duals();
    DualPrices d;
    d.alpha = y[0];
    const int L = index_.num_lines();
    d.q.assign(y.begin() + 1, y.begin() + 1 + L);
    d.lambda.assign(y.begin() + 1 + L, y.end());
    return d;
  }

  const std::vector<Column>& pool() const { return pool_; }
  long iterations() const { return solver_->iterations(); }

 private:
  const Instance& instance_;
  const InstanceIndex& index_;
  std::optional<SimplexSolver> solver_;
  std::vector<Column> pool_;
};

}  // namespace

MasterResult solve_columns_lp(const Instance& instance,
                              const InstanceIndex& index,
                              const std::vector<Column>& columns,
                              double budget_rhs, const MasterConfig& config) {
  MasterLp lp(instance, index, budget_rhs, config);
  for (const auto& col : columns) lp.add_column(col);
  if (lp.solve() != LpStatus::kOptimal)
    throw std::runtime_error("master LP did not reach optimality");
  return {lp.weights(), lp.duals(), lp.objective()};
}

MasterResult restricted_master_solve(const Instance& instance,
                                     const InstanceIndex& index,
                                     const std::vector<Column>& columns,
                                     double eps, const MasterConfig& config) {
  if (eps < 0.0 || eps >= 0.5)
    throw std::invalid_argument("eps must lie in [0, 1/2)");
  return solve_columns_lp(instance, index, columns,
                          instance.budget * (1.0 - eps), config);
}

FractionalSolution solve_config_lp(const Instance& instance,
                                   const InstanceIndex& index, double eps,
                                   double time_budget_secs, std::uint64_t seed,
                                   const MasterConfig& config) {
  if (eps <= 0.0 || eps >= 0.5)
    throw std::invalid_argument("eps must lie in (0, 1/2)");
  if (time_budget_secs <= 0.0)
    throw std::invalid_argument("time budget must be positive");

  const auto start = std::chrono::steady_clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                  std::chrono::duration<double>(time_budget_secs));
  const auto out_of_time = [&] {
    return std::chrono::steady_clock::now() > deadline;
  };

  MasterLp lp(instance, index, instance.budget * (1.0 - eps), config);

  // Per-line record of passenger sets already in the pool, to guard against
  // re-adding a column whose violation sits exactly at tolerance.
  std::vector<std::set<std::vector<PassengerId>>> known(index.num_lines());

  for (int pos = 0; pos < index.num_lines(); ++pos) {
    auto col = greedy_column(instance, index, pos);
    if (col) {
      known[pos].insert(col->passengers);
      lp.add_column(std::move(*col));
    }
  }

  FractionalSolution out;
  out.eps = eps;
  out.seed = seed;

  while (true) {
    LpStatus status;
    try {
      status = lp.solve(deadline);
    } catch (const std::exception& e) {
      throw std::runtime_error("master solve failed in round " +
                               std::to_string(out.rounds + 1) + ": " +
                               e.what());
    }
    ++out.rounds;
    if (status != LpStatus::kOptimal || out_of_time()) break;

    const DualPrices duals = lp.duals();
    int added = 0;
    for (int pos = 0; pos < index.num_lines(); ++pos) {
      auto col = price_line(instance, index, pos, duals, config.pricing_tol);
      if (!col) continue;
      if (!known[pos].insert(col->passengers).second) continue;
      lp.add_column(std::move(*col));
      ++added;
    }
    if (added == 0) {
      out.converged = true;
      break;
    }
    if (out_of_time()) break;
  }

  const std::vector<double> weights = lp.weights();
  for (size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] > 1e-12)
      out.columns.push_back({lp.pool()[j], weights[j]});
  }
  out.objective = lp.objective();
  out.duals = lp.duals();
  out.columns_generated = static_cast<int>(lp.pool().size());
  out.simplex_iterations = lp.iterations();
  out.solve_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

FractionalCheck check_fractional(const Instance& instance,
                                 const InstanceIndex& index,
                                 const FractionalSolution& solution) {
  FractionalCheck check;
  double cost = 0.0;
  std::vector<double> per_line(index.num_lines(), 0.0);
  std::vector<double> per_passenger(index.num_passengers(), 0.0);
  for (const auto& wc : solution.columns) {
    const int line_pos = index.line_pos(wc.column.line);
    cost += instance.lines[line_pos].cost * wc.weight;
    per_line[line_pos] += wc.weight;
    for (PassengerId p : wc.column.passengers)
      per_passenger[index.passenger_pos(p)] += wc.weight;
  }
  check.budget_excess =
      cost - std::max(0.0, instance.budget * (1.0 - solution.eps));
  for (double v : per_line)
    check.line_excess = std::max(check.line_excess, v - 1.0);
  for (double v : per_passenger)
    check.passenger_excess = std::max(check.passenger_excess, v - 1.0);
  return check;
}

}  // namespace rlpp
