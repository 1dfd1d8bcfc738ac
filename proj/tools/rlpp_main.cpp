#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rlpp/exact.hpp"
#include "rlpp/generators.hpp"
#include "rlpp/io.hpp"
#include "rlpp/values.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNoBudgetPlan = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RLPP_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

struct GenOptions {
  std::string type = "synthetic";
  std::string output;
  std::string network_path;  // skeleton mode: instance file providing the network
  rlpp::SyntheticParams synthetic;
  rlpp::SkeletonParams skeleton;
  double eps_gap = 0.5;
  int trip_n = 5;
  double beta = 3.0;
  double alpha = 0.2;
};

int run_gen(const GenOptions& opt) {
  rlpp::Instance inst;
  if (opt.type == "synthetic") {
    inst = rlpp::gen_synthetic(opt.synthetic);
  } else if (opt.type == "gap") {
    inst = rlpp::gen_gadget_integrality_gap(opt.eps_gap);
  } else if (opt.type == "nonsubmodular") {
    inst = rlpp::gen_gadget_nonsubmodular();
  } else if (opt.type == "trip-optimality") {
    inst = rlpp::gen_gadget_trip_optimality(opt.trip_n);
  } else if (opt.type == "skeleton") {
    rlpp::Instance base = rlpp::load_instance(opt.network_path);
    if (!base.network)
      throw std::runtime_error("skeleton generation needs a network in " +
                               opt.network_path);
    inst = base;
    inst.lines = rlpp::gen_skeleton_lines(*base.network, opt.skeleton);
    inst.budget = opt.synthetic.budget;
    inst.capacity = opt.synthetic.capacity;
    inst.max_route_cost = opt.skeleton.max_route_cost > 0
                              ? std::optional<double>(opt.skeleton.max_route_cost)
                              : std::nullopt;
    if (!inst.passengers.empty()) {
      rlpp::ValueParams vp;
      vp.model = rlpp::ValueModel::kCarSaving;
      vp.beta = opt.beta;
      rlpp::compute_all_values(inst, vp);
    } else {
      inst.values.clear();
    }
  } else {
    throw std::runtime_error("unknown generator type: " + opt.type);
  }
  rlpp::save_instance(inst, opt.output);
  std::cout << "wrote " << opt.output << " (" << inst.lines.size()
            << " lines, " << inst.passengers.size() << " passengers, "
            << inst.values.size() << " value entries)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line planning solver: configuration-LP column generation "
               "with randomized rounding, plus exact desk-scale oracles"};
  app.require_subcommand(1);

  // --- gen ---
  GenOptions gen;
  gen.synthetic.seed = default_seed();
  auto* cmd_gen = app.add_subcommand("gen", "generate an instance file");
  cmd_gen->add_option("--type", gen.type,
                      "synthetic | gap | nonsubmodular | trip-optimality | skeleton");
  cmd_gen->add_option("-o,--output", gen.output, "output instance path")
      ->required();
  cmd_gen->add_option("--lines", gen.synthetic.num_lines, "L");
  cmd_gen->add_option("--passengers", gen.synthetic.num_passengers, "N");
  cmd_gen->add_option("--budget", gen.synthetic.budget, "B");
  cmd_gen->add_option("--capacity", gen.synthetic.capacity, "C");
  cmd_gen->add_option("--coverage", gen.synthetic.coverage,
                      "per-pair coverage probability");
  cmd_gen->add_option("--route-min", gen.synthetic.route_len_min, "");
  cmd_gen->add_option("--route-max", gen.synthetic.route_len_max, "");
  cmd_gen->add_option("--line-cost", gen.synthetic.line_cost, "");
  cmd_gen->add_option("--seed", gen.synthetic.seed, "RNG seed");
  cmd_gen->add_option("--eps-gap", gen.eps_gap, "gap gadget parameter");
  cmd_gen->add_option("--n", gen.trip_n, "trip-optimality gadget size");
  cmd_gen->add_option("--network", gen.network_path,
                      "instance file providing the network (skeleton)");
  cmd_gen->add_option("--max-route-cost", gen.skeleton.max_route_cost,
                      "route cost bound D (skeleton)");
  cmd_gen->add_option("--cost-per-time", gen.skeleton.cost_per_time, "");
  cmd_gen->add_option("--waypoints", gen.skeleton.waypoints, "");
  cmd_gen->add_option("--beta", gen.beta, "detour factor for values");

  // --- solve ---
  std::string solve_instance, plan_path, report_path;
  rlpp::SolveArgs solve_args;
  solve_args.seed = default_seed();
  bool omit_timings = false;
  auto* cmd_solve = app.add_subcommand(
      "solve", "column generation + best-of-m randomized rounding");
  cmd_solve->add_option("instance", solve_instance, "instance file")
      ->required();
  cmd_solve->add_option("--epsilon", solve_args.epsilon,
                        "budget slack in (0, 1/2)");
  cmd_solve->add_option("--replications", solve_args.replications,
                        "rounding replications m");
  cmd_solve->add_option("--time-budget-secs", solve_args.time_budget_secs,
                        "wall-clock budget for column generation");
  cmd_solve->add_option("--seed", solve_args.seed, "base RNG seed");
  cmd_solve->add_option("--plan", plan_path, "output plan file");
  cmd_solve->add_option("--report", report_path, "output report file");
  cmd_solve->add_flag("--omit-timings", omit_timings,
                      "null the timings block for byte-stable reports");

  // --- exact ---
  std::string exact_instance, exact_plan_path;
  rlpp::EnumLimits limits;
  std::pair<int, int> limits_pair{limits.max_lines, limits.max_passengers};
  auto* cmd_exact =
      app.add_subcommand("exact", "brute-force optimum (desk scale)");
  cmd_exact->add_option("instance", exact_instance, "instance file")
      ->required();
  cmd_exact->add_option("--limits", limits_pair,
                        "max lines and passengers for enumeration");
  cmd_exact->add_option("--plan", exact_plan_path, "output plan file");

  // --- validate ---
  std::string validate_instance_path;
  auto* cmd_validate =
      app.add_subcommand("validate", "check instance invariants");
  cmd_validate->add_option("instance", validate_instance_path, "instance file")
      ->required();

  // --- export-geo ---
  std::string geo_instance, geo_plan, geo_out;
  auto* cmd_geo =
      app.add_subcommand("export-geo", "write a plan as GeoJSON line features");
  cmd_geo->add_option("instance", geo_instance, "instance file")->required();
  cmd_geo->add_option("plan", geo_plan, "plan file")->required();
  cmd_geo->add_option("-o,--output", geo_out, "output GeoJSON path")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_gen->parsed()) {
      gen.skeleton.seed = gen.synthetic.seed;
      return run_gen(gen);
    }
    if (cmd_solve->parsed()) {
      const rlpp::Instance inst = rlpp::load_instance(solve_instance);
      solve_args.include_timings = !omit_timings;
      const rlpp::RunReport report = rlpp::run_solve(inst, solve_args);
      if (!report_path.empty()) {
        std::ofstream(report_path) << report.report_json;
      }
      if (!plan_path.empty()) rlpp::save_plan(report.plan, plan_path);
      std::cout << report.report_json;
      return report.found_within_budget ? kExitOk : kExitNoBudgetPlan;
    }
    if (cmd_exact->parsed()) {
      const rlpp::Instance inst = rlpp::load_instance(exact_instance);
      rlpp::EnumLimits lim;
      lim.max_lines = limits_pair.first;
      lim.max_passengers = limits_pair.second;
      const rlpp::ExactResult result = rlpp::brute_force_opt(inst, lim);
      std::cout << "optimal welfare: " << result.optimal_welfare << "\n"
                << "lines opened: " << result.plan.open_lines.size() << "\n"
                << "cost: " << result.plan.cost << "\n"
                << "nodes explored: " << result.nodes_explored << "\n"
                << "seconds: " << result.seconds << "\n";
      if (!exact_plan_path.empty()) rlpp::save_plan(result.plan, exact_plan_path);
      return kExitOk;
    }
    if (cmd_validate->parsed()) {
      // Parse without the validity gate, then report violations as data.
      std::ifstream in(validate_instance_path, std::ios::binary);
      if (!in) throw std::runtime_error("cannot open " + validate_instance_path);
      std::ostringstream ss;
      ss << in.rdbuf();
      rlpp::Instance inst;
      try {
        inst = rlpp::instance_from_json(ss.str(), validate_instance_path);
      } catch (const std::exception& e) {
        std::cout << e.what() << "\n";
        return kExitError;
      }
      std::cout << "valid (" << inst.lines.size() << " lines, "
                << inst.passengers.size() << " passengers)\n";
      return kExitOk;
    }
    if (cmd_geo->parsed()) {
      const rlpp::Instance inst = rlpp::load_instance(geo_instance);
      const rlpp::LinePlan plan = rlpp::load_plan(geo_plan);
      rlpp::export_plan_geo(inst, plan, geo_out);
      std::cout << "wrote " << geo_out << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
