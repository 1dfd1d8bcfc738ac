// Acceptance suite: runs every gate criterion end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rlpp/exact.hpp"
#include "rlpp/generators.hpp"
#include "rlpp/interval_selection.hpp"
#include "rlpp/io.hpp"
#include "rlpp/rounding.hpp"
#include "test_support.hpp"

using namespace rlpp;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", id,
              name.c_str(), detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------- 1 ----
// Pricing oracle equivalence: flow-based selection vs exhaustive subsets,
// exact objective match on 200 random problems.
void criterion_1() {
  const auto t0 = Clock::now();
  Rng rng(0xC1);
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int route_length = 1 + static_cast<int>(rng.uniform_int(0, 9));
    const int n = static_cast<int>(rng.uniform_int(0, 12));
    const int capacity = 1 + static_cast<int>(rng.uniform_int(0, 2));
    std::vector<IntervalCandidate> cands;
    for (int i = 0; i < n; ++i) {
      const int a = static_cast<int>(rng.uniform_int(0, route_length - 1));
      const int b = static_cast<int>(rng.uniform_int(a, route_length - 1));
      const double w = (rng.bernoulli(0.1) ? -1.0 : 1.0) *
                       static_cast<double>(rng.uniform_int(1, 64)) / 64.0;
      cands.push_back({i, {a, b}, w});
    }
    const auto sel =
        solve_capacitated_interval_selection(route_length, cands, capacity);

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
      if (ok && total > best) best = total;
    }
    if (sel.objective != best) ++mismatches;  // zero tolerance
  }
  const double secs = seconds_since(t0);
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "%d/200 exact matches, %.2fs (limit 10s)", 200 - mismatches,
                secs);
  report(1, "pricing oracle equivalence", mismatches == 0 && secs < 10.0,
         detail);
}

// Shared corpus for criteria 2-4.
struct SolvedInstance {
  Instance instance;
  FractionalSolution fractional;
  double full_lp_objective = 0.0;
  double brute_force = 0.0;
};

std::vector<SolvedInstance> solve_corpus(double eps, double* cg_seconds) {
  std::vector<SolvedInstance> corpus;
  Rng rng(0xC2C3C4);
  const auto t0 = Clock::now();
  for (int k = 0; k < 100; ++k) {
    SolvedInstance s;
    s.instance = testing::random_small_instance(rng, 8, 10, 2);
    const InstanceIndex index(s.instance);
    s.fractional = solve_config_lp(s.instance, index, eps, 30.0,
                                   derive_seed(0xC2, k));
    s.full_lp_objective = config_lp_full(s.instance, eps).objective;
    corpus.push_back(std::move(s));
  }
  *cg_seconds = seconds_since(t0);
  for (auto& s : corpus) s.brute_force = brute_force_opt(s.instance).optimal_welfare;
  return corpus;
}

// ---------------------------------------------------------------- 2 ----
void criterion_2(const std::vector<SolvedInstance>& corpus, double secs) {
  int converged = 0;
  double worst_gap = 0.0;
  for (const auto& s : corpus) {
    if (s.fractional.converged) ++converged;
    worst_gap = std::max(
        worst_gap, std::abs(s.fractional.objective - s.full_lp_objective));
  }
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "%d/100 converged, max |cg - full| = %.2e (tol 1e-6), %.2fs "
                "(limit 60s)",
                converged, worst_gap, secs);
  report(2, "column generation exactness",
         converged == 100 && worst_gap <= 1e-6 && secs < 60.0, detail);
}

// ---------------------------------------------------------------- 3 ----
void criterion_3(const std::vector<SolvedInstance>& corpus, double eps) {
  const int m = 10000;
  const double factor = 1.0 - std::exp(-1.0);
  int holds_lp = 0, holds_ilp = 0;
  double worst_margin = 1e30;
  for (size_t k = 0; k < corpus.size(); ++k) {
    const auto& s = corpus[k];
    const InstanceIndex index(s.instance);
    auto [plan, stats] =
        best_of_m(s.fractional, s.instance, index, m, derive_seed(0xC3, k));
    const double slack = 3.0 * stats.welfare_stderr;
    if (stats.mean_welfare >= factor * s.fractional.objective - slack)
      ++holds_lp;
    if (stats.mean_welfare >= (factor - eps) * s.brute_force - slack)
      ++holds_ilp;
    worst_margin = std::min(worst_margin,
                            stats.mean_welfare -
                                (factor * s.fractional.objective - slack));
  }
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "vs (1-1/e)*LP: %d/100; vs (1-1/e-eps)*OPT: %d/100; worst "
                "margin %.3e",
                holds_lp, holds_ilp, worst_margin);
  report(3, "approximation guarantee (Monte Carlo)",
         holds_lp == 100 && holds_ilp == 100, detail);
}

// ---------------------------------------------------------------- 4 ----
void criterion_4(const std::vector<SolvedInstance>& corpus, double eps) {
  const int m = 10000;
  int tail_ok = 0, mean_ok = 0;
  for (size_t k = 0; k < corpus.size(); ++k) {
    const auto& s = corpus[k];
    const InstanceIndex index(s.instance);
    auto [plan, stats] =
        best_of_m(s.fractional, s.instance, index, m, derive_seed(0xC4, k));

    double c_max = 0.0;
    for (const auto& line : s.instance.lines)
      c_max = std::max(c_max, line.cost);
    const double exceed = 1.0 - stats.alpha;  // P(cost > B), empirically
    const double bound =
        std::exp(-eps * eps * s.instance.budget / (3.0 * c_max));
    const double se = std::sqrt(std::max(exceed * (1.0 - exceed), 1e-12) / m);
    if (exceed <= bound + 3.0 * se) ++tail_ok;
    if (stats.mean_cost <=
        s.instance.budget * (1.0 - eps) + 3.0 * stats.cost_stderr)
      ++mean_ok;
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "tail bound: %d/100; expected cost: %d/100", tail_ok, mean_ok);
  report(4, "budget tail and expectation bounds",
         tail_ok == 100 && mean_ok == 100, detail);
}

// ---------------------------------------------------------------- 5 ----
void criterion_5() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream detail;

  const Instance gap = gen_gadget_integrality_gap(0.5);
  const double gap_opt = brute_force_opt(gap).optimal_welfare;
  const double gap_lp = config_lp_full(gap, 0.0).objective;
  ok &= gap_opt == 1.0 && gap_lp == 1.5;
  detail << "gap: OPT=" << gap_opt << " LP=" << gap_lp;

  const Instance nonsub = gen_gadget_nonsubmodular();
  const double w1 = welfare_oracle_w(nonsub, {0});
  const double w12 = welfare_oracle_w(nonsub, {0, 1});
  const double w13 = welfare_oracle_w(nonsub, {0, 2});
  const double w123 = welfare_oracle_w(nonsub, {0, 1, 2});
  ok &= w1 == 2.0 && w12 == 2.0 && w13 == 2.0 && w123 == 3.0;
  detail << "; nonsub: " << w1 << "," << w12 << "," << w13 << "," << w123;

  const Instance trip = gen_gadget_trip_optimality(5);
  const double trip_opt = brute_force_opt(trip).optimal_welfare;
  ok &= trip_opt == 1.0;
  detail << "; trip: OPT=" << trip_opt;

  const double secs = seconds_since(t0);
  detail << " (" << secs << "s, limit 5s)";
  report(5, "gadget regressions, exact values", ok && secs < 5.0,
         detail.str());
}

// ---------------------------------------------------------------- 6 ----
void criterion_6() {
  Rng rng(0xC6);
  int violations = 0, merges = 0, replications = 0;
  while (replications < 1000) {
    // Same-route lines at frequencies 1 and 2, equal values across the pair.
    Instance inst;
    inst.capacity = 1;
    const int routes = 2 + static_cast<int>(rng.uniform_int(0, 1));
    inst.budget = 2.0 * routes;
    EdgeId next_edge = 0;
    for (int r = 0; r < routes; ++r) {
      std::vector<EdgeId> route;
      const int len = 2 + static_cast<int>(rng.uniform_int(0, 2));
      for (int e = 0; e < len; ++e) route.push_back(next_edge++);
      inst.lines.push_back({2 * r, route, 1, 1.0, {}});
      inst.lines.push_back({2 * r + 1, route, 2, 1.8, {}});
    }
    const int N = 6;
    for (int p = 0; p < N; ++p)
      inst.passengers.push_back({p, 2 * p, 2 * p + 1, {}});
    for (int r = 0; r < routes; ++r) {
      const int len = inst.lines[2 * r].num_edges();
      for (int p = 0; p < N; ++p) {
        if (!rng.bernoulli(0.5)) continue;
        const int a = static_cast<int>(rng.uniform_int(0, len - 1));
        const int b = static_cast<int>(rng.uniform_int(a, len - 1));
        const double v = rng.uniform_int(1, 64) / 64.0;
        inst.values.push_back({p, 2 * r, v, {a, b}});
        inst.values.push_back({p, 2 * r + 1, v, {a, b}});
      }
    }
    const InstanceIndex index(inst);
    const FractionalSolution sol = config_lp_full(inst, 0.05);
    for (int rep = 0; rep < 50 && replications < 1000; ++rep, ++replications) {
      const RoundTrace trace = round_once_traced(
          sol, inst, index, derive_seed(0xC6, replications));
      if (trace.plan.welfare < trace.before_aggregation.welfare - 1e-12)
        ++violations;
      if (trace.plan.cost > trace.before_aggregation.cost + 1e-12)
        ++violations;
      if (!welfare_of(inst, index, trace.plan).feasible()) ++violations;
      for (const auto& o : trace.plan.open_lines)
        if (o.members.size() > 1) ++merges;
    }
  }
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "%d replications, %d merges exercised, %d violations",
                replications, merges, violations);
  report(6, "aggregation properties", violations == 0 && merges > 0, detail);
}

// ---------------------------------------------------------------- 7 ----
void criterion_7() {
  SyntheticParams params;
  params.num_lines = 200;
  params.num_passengers = 1000;
  params.budget = 20.0;
  params.capacity = 30;
  params.seed = 0x57;
  const Instance inst = gen_synthetic(params);
  const InstanceIndex index(inst);

  // The 120s envelope covers both phases; column generation gets the bulk
  // and hands back its incumbent when the clock runs out.
  const auto t0 = Clock::now();
  const FractionalSolution sol = solve_config_lp(inst, index, 0.05, 108.0, 1);
  auto [plan, stats] = best_of_m(sol, inst, index, 1000, 1);
  const double secs = seconds_since(t0);

  char detail[200];
  std::snprintf(detail, sizeof(detail),
                "master %.2f (%s, %d rounds, %d cols), best welfare %.2f, "
                "eta %.3f (floor 0.60), alpha %.2f, %.1fs (limit 120s)",
                sol.objective, sol.converged ? "converged" : "timeout",
                sol.rounds, sol.columns_generated, stats.best_welfare,
                stats.eta, stats.alpha, secs);
  report(7, "scale smoke test", stats.eta >= 0.60 && secs < 120.0, detail);
}

// ---------------------------------------------------------------- 8 ----
void criterion_8() {
  const char* cli = RLPP_CLI_PATH;
  const std::string inst_path = "/tmp/rlpp_acceptance_det.json";
  SyntheticParams params;
  params.num_lines = 30;
  params.num_passengers = 120;
  params.budget = 5.0;
  params.capacity = 4;
  params.coverage = 0.2;
  params.route_len_min = 2;
  params.route_len_max = 8;
  params.seed = 88;
  save_instance(gen_synthetic(params), inst_path);

  auto run_once = [&](const std::string& report_path,
                      const std::string& plan_path) {
    const std::string cmd =
        std::string(cli) + " solve " + inst_path +
        " --epsilon 0.05 --replications 500 --seed 17 --omit-timings" +
        " --report " + report_path + " --plan " + plan_path +
        " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };

  const int rc1 = run_once("/tmp/rlpp_acc_r1.json", "/tmp/rlpp_acc_p1.json");
  const int rc2 = run_once("/tmp/rlpp_acc_r2.json", "/tmp/rlpp_acc_p2.json");
  const std::string r1 = slurp("/tmp/rlpp_acc_r1.json");
  const std::string r2 = slurp("/tmp/rlpp_acc_r2.json");
  const std::string p1 = slurp("/tmp/rlpp_acc_p1.json");
  const std::string p2 = slurp("/tmp/rlpp_acc_p2.json");

  const bool pass = rc1 == rc2 && !r1.empty() && r1 == r2 && !p1.empty() &&
                    p1 == p2;
  char detail[128];
  std::snprintf(detail, sizeof(detail),
                "report bytes %zu == %zu, plan bytes %zu == %zu", r1.size(),
                r2.size(), p1.size(), p2.size());
  report(8, "byte-identical reports across runs", pass, detail);
}

}  // namespace

int main() {
  criterion_1();

  const double eps = 0.05;
  double cg_seconds = 0.0;
  const auto corpus = solve_corpus(eps, &cg_seconds);
  criterion_2(corpus, cg_seconds);
  criterion_3(corpus, eps);
  criterion_4(corpus, eps);

  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
