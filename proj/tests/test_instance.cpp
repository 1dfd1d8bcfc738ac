#include <doctest.h>

#include <map>

#include "rlpp/generators.hpp"
#include "rlpp/instance.hpp"
#include "rlpp/plan.hpp"
#include "rlpp/rng.hpp"

using namespace rlpp;

namespace {

Instance small_valid_instance() {
  Instance inst;
  inst.budget = 2.0;
  inst.capacity = 1;
  inst.lines.push_back({0, {0, 1}, 1, 1.0, {}});
  inst.lines.push_back({1, {2}, 1, 1.0, {}});
  inst.passengers.push_back({0, 0, 1, {}});
  inst.passengers.push_back({1, 2, 3, {}});
  inst.values.push_back({0, 0, 0.5, {0, 1}});
  inst.values.push_back({1, 1, 0.25, {0, 0}});
  return inst;
}

}  // namespace

TEST_CASE("well-formed instance has no violations") {
  CHECK(validate_instance(small_valid_instance()).empty());
}

TEST_CASE("unknown line reference is one violation") {
  Instance inst = small_valid_instance();
  inst.values.push_back({0, 99, 0.5, {0, 0}});
  const auto violations = validate_instance(inst);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].message.find("unknown line") != std::string::npos);
}

TEST_CASE("cost must strictly increase with frequency on a shared route") {
  Instance inst;
  inst.budget = 5.0;
  inst.capacity = 1;
  inst.lines.push_back({0, {0, 1}, 1, 2.0, {}});
  inst.lines.push_back({1, {0, 1}, 2, 2.0, {}});  // same cost, higher freq
  inst.passengers.push_back({0, 0, 1, {}});
  const auto violations = validate_instance(inst);
  REQUIRE(!violations.empty());
  CHECK(violations[0].message.find("strictly increasing") != std::string::npos);
}

TEST_CASE("same-route values may not decrease with frequency") {
  Instance inst;
  inst.budget = 5.0;
  inst.capacity = 1;
  inst.lines.push_back({0, {0, 1}, 1, 1.0, {}});
  inst.lines.push_back({1, {0, 1}, 2, 1.5, {}});
  inst.passengers.push_back({0, 0, 1, {}});
  inst.values.push_back({0, 0, 0.8, {0, 0}});
  inst.values.push_back({0, 1, 0.5, {0, 0}});  // lower on the faster line
  const auto violations = validate_instance(inst);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].message.find("decreases") != std::string::npos);
}

TEST_CASE("basic field violations are all reported") {
  Instance inst = small_valid_instance();
  inst.budget = -1.0;
  inst.capacity = 0;
  inst.passengers.push_back({2, 5, 5, {}});  // source == dest
  const auto violations = validate_instance(inst);
  CHECK(violations.size() == 3);
}

TEST_CASE("route node chains") {
  Network net;
  net.node_count = 4;
  net.edges = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}};

  CHECK(route_nodes(net, {0, 1, 2}) == std::vector<NodeId>{0, 1, 2, 3});
  // Reversed traversal of the same edges.
  CHECK(route_nodes(net, {2, 1, 0}) == std::vector<NodeId>{3, 2, 1, 0});
  // Backtracking walk.
  CHECK(route_nodes(net, {0, 0}) == std::vector<NodeId>{0, 1, 0});
  CHECK_THROWS(route_nodes(net, {0, 2}));  // gap between edges
  CHECK_THROWS(route_nodes(net, {}));
}

TEST_CASE("welfare_of: empty plan") {
  const Instance inst = small_valid_instance();
  const LinePlan plan;
  const WelfareCheck check = welfare_of(inst, plan);
  CHECK(check.welfare == 0.0);
  CHECK(check.feasible());
  CHECK(check.within_budget);
}

TEST_CASE("welfare_of: nonsubmodular gadget, p1 and p2 on line 0") {
  const Instance inst = gen_gadget_nonsubmodular();
  LinePlan plan;
  plan.open_lines.push_back({0, {0}, 1, 1.0});
  plan.assignment = {{0, 0}, {1, 0}};
  const WelfareCheck check = welfare_of(inst, plan);
  CHECK(check.welfare == 2.0);
  CHECK(check.feasible());
}

TEST_CASE("welfare_of flags a capacity overflow") {
  const Instance inst = gen_gadget_nonsubmodular();
  LinePlan plan;
  plan.open_lines.push_back({0, {0}, 1, 1.0});
  plan.assignment = {{0, 0}, {2, 0}};  // p2 spans both edges, p0 uses edge 0
  CHECK_FALSE(welfare_of(inst, plan).capacity_ok);
}

TEST_CASE("welfare_of rejects an uncovered assignment") {
  const Instance inst = small_valid_instance();
  LinePlan plan;
  plan.open_lines.push_back({1, {1}, 1, 1.0});
  plan.assignment = {{0, 1}};  // passenger 0 has no entry on line 1
  CHECK_THROWS(welfare_of(inst, plan));
}

TEST_CASE("welfare_of equals recomputation from raw entries on random plans") {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    Instance inst;
    inst.budget = 100.0;
    inst.capacity = 2;
    const int L = 3, N = 6;
    for (int l = 0; l < L; ++l)
      inst.lines.push_back({l, {3 * l, 3 * l + 1, 3 * l + 2}, 1, 1.0, {}});
    for (int p = 0; p < N; ++p) inst.passengers.push_back({p, 2 * p, 2 * p + 1, {}});
    for (int l = 0; l < L; ++l)
      for (int p = 0; p < N; ++p) {
        if (!rng.bernoulli(0.5)) continue;
        const int start = static_cast<int>(rng.uniform_int(0, 2));
        const int last = static_cast<int>(rng.uniform_int(start, 2));
        inst.values.push_back({p, l, rng.uniform(), {start, last}});
      }
    const InstanceIndex index(inst);

    // Random assignment: each passenger picks a covering line or none.
    LinePlan plan;
    std::map<LineId, int> used;
    double expected = 0.0;
    for (int p = 0; p < N; ++p) {
      std::vector<const ValueEntry*> options;
      for (int l = 0; l < L; ++l)
        if (const ValueEntry* e = index.entry(l, p)) options.push_back(e);
      if (options.empty() || rng.bernoulli(0.3)) continue;
      const auto* pick =
          options[rng.uniform_int(0, static_cast<int>(options.size()) - 1)];
      plan.assignment.push_back({p, pick->line});
      expected += pick->value;
      used[pick->line] = 1;
    }
    for (const auto& [line, _] : used)
      plan.open_lines.push_back({line, {line}, 1, 1.0});

    const WelfareCheck check = welfare_of(inst, index, plan);
    CHECK(check.welfare == doctest::Approx(expected).epsilon(1e-12));

    // Additivity: the welfare decomposes over per-line restrictions.
    double sum_parts = 0.0;
    for (const auto& open : plan.open_lines) {
      LinePlan part;
      part.open_lines.push_back(open);
      for (const auto& a : plan.assignment)
        if (a.line == open.line) part.assignment.push_back(a);
      sum_parts += welfare_of(inst, index, part).welfare;
    }
    CHECK(sum_parts == doctest::Approx(check.welfare).epsilon(1e-12));
  }
}
