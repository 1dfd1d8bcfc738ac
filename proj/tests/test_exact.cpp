#include <doctest.h>

#include <algorithm>
#include <map>

#include "rlpp/exact.hpp"
#include "rlpp/generators.hpp"
#include "rlpp/plan.hpp"
#include "test_support.hpp"

using namespace rlpp;

namespace {

// Independent second oracle: enumerate assignment vectors first (each
// passenger picks a covering line or none), then derive the open set and
// check budget and capacity.
double assignment_first_opt(const Instance& inst) {
  const InstanceIndex index(inst);
  const int N = index.num_passengers();
  std::vector<std::vector<const ValueEntry*>> options(N);
  for (const auto& v : inst.values)
    if (v.value > 0.0)
      options[index.passenger_pos(v.passenger)].push_back(&v);

  double best = 0.0;
  std::vector<int> pick(N, -1);
  auto recurse = [&](auto&& self, int p) -> void {
    if (p == N) {
      std::map<LineId, std::vector<int>> usage;
      double welfare = 0.0, cost = 0.0;
      for (int i = 0; i < N; ++i) {
        if (pick[i] < 0) continue;
        const ValueEntry* e = options[i][pick[i]];
        auto [it, fresh] = usage.try_emplace(e->line);
        if (fresh) {
          const Line& line = inst.lines[index.line_pos(e->line)];
          it->second.assign(line.route.size(), 0);
          cost += line.cost;
        }
        welfare += e->value;
        for (int k = e->sub_route.first; k <= e->sub_route.last; ++k)
          ++it->second[k];
      }
      if (cost > inst.budget + 1e-9) return;
      for (const auto& [line, use] : usage) {
        const Line& l = inst.lines[index.line_pos(line)];
        const long cap = static_cast<long>(inst.capacity) * l.frequency;
        for (int u : use)
          if (u > cap) return;
      }
      best = std::max(best, welfare);
      return;
    }
    pick[p] = -1;
    self(self, p + 1);
    for (int k = 0; k < static_cast<int>(options[p].size()); ++k) {
      pick[p] = k;
      self(self, p + 1);
    }
    pick[p] = -1;
  };
  recurse(recurse, 0);
  return best;
}

}  // namespace

TEST_CASE("zero budget leaves the empty plan") {
  Instance inst = gen_gadget_integrality_gap(0.5);
  inst.budget = 0.0;
  const ExactResult res = brute_force_opt(inst);
  CHECK(res.optimal_welfare == 0.0);
  CHECK(res.plan.open_lines.empty());
}

TEST_CASE("integrality-gap gadget: ILP optimum is one line") {
  const ExactResult res = brute_force_opt(gen_gadget_integrality_gap(0.5));
  CHECK(res.optimal_welfare == doctest::Approx(1.0));
  CHECK(res.plan.open_lines.size() == 1);
  CHECK(res.plan.within_budget);
}

TEST_CASE("brute force equals the assignment-first oracle") {
  Rng rng(808);
  for (int trial = 0; trial < 25; ++trial) {
    const Instance inst = testing::random_small_instance(rng, 6, 8, 2);
    const ExactResult res = brute_force_opt(inst);
    CHECK(res.optimal_welfare ==
          doctest::Approx(assignment_first_opt(inst)).epsilon(1e-12));
    // The reported plan re-validates and matches the reported optimum.
    const WelfareCheck check = welfare_of(inst, res.plan);
    CHECK(check.feasible());
    CHECK(check.within_budget);
    CHECK(check.welfare == doctest::Approx(res.optimal_welfare));
  }
}

TEST_CASE("welfare oracle reproduces the nonsubmodularity pattern") {
  const Instance inst = gen_gadget_nonsubmodular();
  CHECK(welfare_oracle_w(inst, {}) == 0.0);
  CHECK(welfare_oracle_w(inst, {0}) == doctest::Approx(2.0));
  CHECK(welfare_oracle_w(inst, {0, 1}) == doctest::Approx(2.0));
  CHECK(welfare_oracle_w(inst, {0, 2}) == doctest::Approx(2.0));
  CHECK(welfare_oracle_w(inst, {0, 1, 2}) == doctest::Approx(3.0));
  // The submodularity inequality fails at (S1, S2, l3).
  const double lhs = welfare_oracle_w(inst, {0, 2}) - welfare_oracle_w(inst, {0});
  const double rhs =
      welfare_oracle_w(inst, {0, 1, 2}) - welfare_oracle_w(inst, {0, 1});
  CHECK(lhs < rhs);
}

TEST_CASE("welfare oracle is monotone in the open set") {
  Rng rng(2468);
  for (int trial = 0; trial < 10; ++trial) {
    const Instance inst = testing::random_small_instance(rng, 5, 7, 2);
    std::vector<LineId> open;
    double prev = welfare_oracle_w(inst, open);
    for (const auto& line : inst.lines) {
      open.push_back(line.id);
      const double next = welfare_oracle_w(inst, open);
      CHECK(next >= prev - 1e-12);
      prev = next;
    }
  }
}

TEST_CASE("feasible sets of the two-passenger example") {
  Instance inst;
  inst.budget = 2.0;
  inst.lines.push_back({0, {0, 1}, 1, 1.0, {}});
  inst.passengers.push_back({0, 0, 1, {}});
  inst.passengers.push_back({1, 2, 3, {}});
  inst.values.push_back({0, 0, 1.0, {0, 1}});
  inst.values.push_back({1, 0, 1.0, {0, 1}});

  inst.capacity = 2;
  CHECK(enumerate_feasible_sets(inst, 0) ==
        std::vector<std::vector<PassengerId>>{{0}, {1}, {0, 1}});
  inst.capacity = 1;
  CHECK(enumerate_feasible_sets(inst, 0) ==
        std::vector<std::vector<PassengerId>>{{0}, {1}});
}

TEST_CASE("a line with no covered passengers has no feasible sets") {
  Instance inst;
  inst.budget = 1.0;
  inst.capacity = 1;
  inst.lines.push_back({0, {0}, 1, 1.0, {}});
  inst.passengers.push_back({0, 0, 1, {}});
  CHECK(enumerate_feasible_sets(inst, 0).empty());
}

TEST_CASE("full LP: eps 1 forces zero, eps 0 reaches the relaxation") {
  const Instance inst = gen_gadget_integrality_gap(0.5);
  CHECK(config_lp_full(inst, 1.0).objective == 0.0);
  CHECK(config_lp_full(inst, 0.0).objective == doctest::Approx(1.5));
}

TEST_CASE("full LP dominates the integral optimum and shrinks with eps") {
  Rng rng(1357);
  for (int trial = 0; trial < 12; ++trial) {
    const Instance inst = testing::random_small_instance(rng, 5, 7, 2);
    const double opt = brute_force_opt(inst).optimal_welfare;
    double prev = -1.0;
    for (const double eps : {0.0, 0.05, 0.2, 0.5}) {
      const double obj = config_lp_full(inst, eps).objective;
      CHECK(obj >= (1.0 - eps) * opt - 1e-7);
      if (prev >= 0.0) CHECK(obj <= prev + 1e-9);  // non-increasing in eps
      prev = obj;
    }
  }
}

TEST_CASE("oracles refuse beyond their limits") {
  Rng rng(9);
  Instance inst = testing::random_small_instance(rng, 6, 8, 2);
  EnumLimits limits;
  limits.max_lines = 1;  // generated instances always have at least 2
  CHECK_THROWS_AS(brute_force_opt(inst, limits), LimitError);
  limits = {};
  limits.max_passengers = 2;  // and at least 3 passengers
  CHECK_THROWS_AS(brute_force_opt(inst, limits), LimitError);
  limits = {};
  limits.max_covered_per_line = 0;
  bool has_covered_line = false;
  for (const auto& line : inst.lines) {
    const InstanceIndex index(inst);
    if (!index.entries_for_line(index.line_pos(line.id)).empty()) {
      has_covered_line = true;
      CHECK_THROWS_AS(enumerate_feasible_sets(inst, line.id, limits),
                      LimitError);
      break;
    }
  }
  CHECK(has_covered_line);
}
