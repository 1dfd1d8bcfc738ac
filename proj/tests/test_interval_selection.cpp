#include <doctest.h>

#include <algorithm>
#include <vector>

#include "rlpp/interval_selection.hpp"
#include "rlpp/rng.hpp"

using namespace rlpp;

namespace {

// Brute-force oracle: try all 2^n subsets.
double exhaustive_max(int route_length,
                      const std::vector<IntervalCandidate>& cands,
                      int capacity) {
  const int n = static_cast<int>(cands.size());
  double best = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> use(route_length, 0);
    double total = 0.0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      total += cands[i].weight;
      for (int e = cands[i].range.first; e <= cands[i].range.last; ++e)
        if (++use[e] > capacity) ok = false;
    }
    if (ok) best = std::max(best, total);
  }
  return best;
}

// Weights on a dyadic grid make every subset sum exact in double precision.
double dyadic(Rng& rng) { return rng.uniform_int(1, 64) / 64.0; }

}  // namespace

TEST_CASE("nonpositive weights yield the empty selection") {
  std::vector<IntervalCandidate> cands = {{0, {0, 1}, 0.0}, {1, {1, 2}, -2.0}};
  const auto sel = solve_capacitated_interval_selection(3, cands, 2);
  CHECK(sel.selected.empty());
  CHECK(sel.objective == 0.0);
}

TEST_CASE("capacity one on identical edges keeps only the heavier") {
  std::vector<IntervalCandidate> cands = {{7, {0, 1}, 0.7}, {9, {0, 1}, 0.4}};
  const auto sel = solve_capacitated_interval_selection(2, cands, 1);
  CHECK(sel.selected == std::vector<int>{7});
  CHECK(sel.objective == 0.7);
}

TEST_CASE("disjoint intervals all fit even at capacity one") {
  std::vector<IntervalCandidate> cands = {
      {0, {0, 0}, 0.5}, {1, {1, 1}, 0.25}, {2, {2, 3}, 0.75}};
  const auto sel = solve_capacitated_interval_selection(4, cands, 1);
  CHECK(sel.selected.size() == 3);
  CHECK(sel.objective == 1.5);
}

TEST_CASE("invalid ranges are structural errors") {
  CHECK_THROWS_AS(solve_capacitated_interval_selection(
                      3, {{0, {2, 1}, 1.0}}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_capacitated_interval_selection(
                      3, {{0, {1, 5}, 1.0}}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_capacitated_interval_selection(0, {}, 1),
                  std::invalid_argument);
}

TEST_CASE("matches exhaustive subset maximization on random problems") {
  Rng rng(417);
  for (int trial = 0; trial < 300; ++trial) {
    const int route_length = 1 + static_cast<int>(rng.uniform_int(0, 9));
    const int n = static_cast<int>(rng.uniform_int(0, 12));
    const int capacity = 1 + static_cast<int>(rng.uniform_int(0, 2));
    std::vector<IntervalCandidate> cands;
    for (int i = 0; i < n; ++i) {
      const int a = static_cast<int>(rng.uniform_int(0, route_length - 1));
      const int b = static_cast<int>(rng.uniform_int(a, route_length - 1));
      // Mix in nonpositive weights to confirm they never enter.
      const double w = rng.bernoulli(0.15) ? -dyadic(rng) : dyadic(rng);
      cands.push_back({i, {a, b}, w});
    }
    const auto sel =
        solve_capacitated_interval_selection(route_length, cands, capacity);
    const double want = exhaustive_max(route_length, cands, capacity);
    CHECK(sel.objective == want);  // exact: dyadic weights

    // The reported selection is consistent and feasible.
    std::vector<int> use(route_length, 0);
    double total = 0.0;
    for (int key : sel.selected) {
      CHECK(cands[key].weight > 0.0);
      total += cands[key].weight;
      for (int e = cands[key].range.first; e <= cands[key].range.last; ++e) {
        ++use[e];
        CHECK(use[e] <= capacity);
      }
    }
    CHECK(total == sel.objective);
  }
}
