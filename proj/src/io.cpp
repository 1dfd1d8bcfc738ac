#include "rlpp/io.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rlpp {

using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

json instance_to_tree(const Instance& inst) {
  json j;
  j["format_version"] = kFormatVersion;
  j["budget"] = inst.budget;
  j["capacity"] = inst.capacity;
  if (inst.max_route_cost) j["max_route_cost"] = *inst.max_route_cost;
  if (inst.network) {
    json net;
    net["nodes"] = inst.network->node_count;
    net["edges"] = json::array();
    for (const auto& e : inst.network->edges)
      net["edges"].push_back({{"u", e.u}, {"v", e.v}, {"cost", e.cost}});
    if (inst.network->has_coords()) {
      net["coords"] = json::array();
      for (const auto& c : inst.network->node_coords)
        net["coords"].push_back({c[0], c[1]});
    }
    j["network"] = std::move(net);
  }
  j["lines"] = json::array();
  for (const auto& l : inst.lines) {
    json line;
    line["id"] = l.id;
    line["route"] = l.route;
    line["frequency"] = l.frequency;
    line["cost"] = l.cost;
    if (l.start_time) line["start_time"] = *l.start_time;
    j["lines"].push_back(std::move(line));
  }
  j["passengers"] = json::array();
  for (const auto& p : inst.passengers) {
    json pj;
    pj["id"] = p.id;
    pj["source"] = p.source;
    pj["dest"] = p.dest;
    if (p.request_time) pj["request_time"] = *p.request_time;
    j["passengers"].push_back(std::move(pj));
  }
  j["values"] = json::array();
  for (const auto& v : inst.values) {
    j["values"].push_back({{"passenger", v.passenger},
                           {"line", v.line},
                           {"value", v.value},
                           {"first_edge", v.sub_route.first},
                           {"last_edge", v.sub_route.last}});
  }
  if (!inst.metadata.empty()) {
    json meta;
    for (const auto& [k, v] : inst.metadata) meta[k] = v;
    j["metadata"] = std::move(meta);
  }
  return j;
}

Instance instance_from_tree(const json& j, const std::string& origin) {
  if (!j.contains("format_version") || j["format_version"].get<int>() != kFormatVersion)
    throw std::runtime_error(origin + ": missing or unsupported format_version");
  Instance inst;
  inst.budget = j.at("budget").get<double>();
  inst.capacity = j.at("capacity").get<int>();
  if (j.contains("max_route_cost") && !j["max_route_cost"].is_null())
    inst.max_route_cost = j["max_route_cost"].get<double>();
  if (j.contains("network") && !j["network"].is_null()) {
    Network net;
    const json& nj = j["network"];
    net.node_count = nj.at("nodes").get<int>();
    for (const auto& e : nj.at("edges"))
      net.edges.push_back({e.at("u").get<int>(), e.at("v").get<int>(),
                           e.at("cost").get<double>()});
    if (nj.contains("coords")) {
      for (const auto& c : nj["coords"])
        net.node_coords.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
    }
    inst.network = std::move(net);
  }
  for (const auto& lj : j.at("lines")) {
    Line line;
    line.id = lj.at("id").get<int>();
    line.route = lj.at("route").get<std::vector<EdgeId>>();
    line.frequency = lj.at("frequency").get<int>();
    line.cost = lj.at("cost").get<double>();
    if (lj.contains("start_time") && !lj["start_time"].is_null())
      line.start_time = lj["start_time"].get<double>();
    inst.lines.push_back(std::move(line));
  }
  for (const auto& pj : j.at("passengers")) {
    Passenger p;
    p.id = pj.at("id").get<int>();
    p.source = pj.at("source").get<int>();
    p.dest = pj.at("dest").get<int>();
    if (pj.contains("request_time") && !pj["request_time"].is_null())
      p.request_time = pj["request_time"].get<double>();
    inst.passengers.push_back(p);
  }
  for (const auto& vj : j.at("values")) {
    inst.values.push_back({vj.at("passenger").get<int>(),
                           vj.at("line").get<int>(),
                           vj.at("value").get<double>(),
                           {vj.at("first_edge").get<int>(),
                            vj.at("last_edge").get<int>()}});
  }
  if (j.contains("metadata")) {
    for (const auto& [k, v] : j["metadata"].items())
      inst.metadata[k] = v.get<double>();
  }
  return inst;
}

}  // namespace

std::string instance_to_json(const Instance& instance) {
  return instance_to_tree(instance).dump(2) + "\n";
}

Instance instance_from_json(const std::string& text,
                            const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(origin + ": parse error at byte " +
                             std::to_string(e.byte) + ": " + e.what());
  }
  Instance inst = instance_from_tree(j, origin);
  const auto violations = validate_instance(inst);
  if (!violations.empty()) {
    std::string msg = origin + ": invalid instance:";
    for (const auto& v : violations)
      msg += "\n  " + v.location + ": " + v.message;
    throw std::runtime_error(msg);
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  return instance_from_json(read_file(path), path);
}

void save_instance(const Instance& instance, const std::string& path) {
  write_file(path, instance_to_json(instance));
}

namespace {

json plan_to_tree(const LinePlan& plan) {
  json j;
  j["format_version"] = kFormatVersion;
  j["open_lines"] = json::array();
  for (const auto& o : plan.open_lines)
    j["open_lines"].push_back({{"line", o.line},
                               {"members", o.members},
                               {"frequency", o.frequency},
                               {"cost", o.cost}});
  j["assignment"] = json::array();
  for (const auto& a : plan.assignment)
    j["assignment"].push_back({{"passenger", a.passenger}, {"line", a.line}});
  j["welfare"] = plan.welfare;
  j["cost"] = plan.cost;
  j["within_budget"] = plan.within_budget;
  j["seed"] = plan.seed;
  return j;
}

}  // namespace

void save_plan(const LinePlan& plan, const std::string& path) {
  write_file(path, plan_to_tree(plan).dump(2) + "\n");
}

LinePlan load_plan(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": parse error at byte " +
                             std::to_string(e.byte) + ": " + e.what());
  }
  LinePlan plan;
  for (const auto& oj : j.at("open_lines")) {
    OpenLine o;
    o.line = oj.at("line").get<int>();
    o.members = oj.at("members").get<std::vector<LineId>>();
    o.frequency = oj.at("frequency").get<int>();
    o.cost = oj.at("cost").get<double>();
    plan.open_lines.push_back(std::move(o));
  }
  for (const auto& aj : j.at("assignment"))
    plan.assignment.push_back(
        {aj.at("passenger").get<int>(), aj.at("line").get<int>()});
  plan.welfare = j.at("welfare").get<double>();
  plan.cost = j.at("cost").get<double>();
  plan.within_budget = j.at("within_budget").get<bool>();
  plan.seed = j.at("seed").get<std::uint64_t>();
  return plan;
}

std::string instance_digest(const Instance& instance) {
  const std::string text = instance_to_json(instance);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

RunReport run_solve(const Instance& instance, const SolveArgs& args) {
  if (args.epsilon <= 0.0 || args.epsilon >= 0.5)
    throw std::invalid_argument("epsilon must lie in (0, 1/2)");
  if (args.replications < 1)
    throw std::invalid_argument("replications must be >= 1");

  const auto t0 = std::chrono::steady_clock::now();
  const InstanceIndex index(instance);

  FractionalSolution fractional = solve_config_lp(
      instance, index, args.epsilon, args.time_budget_secs, args.seed);
  const auto t1 = std::chrono::steady_clock::now();

  auto [best, stats] =
      best_of_m(fractional, instance, index, args.replications, args.seed);
  const auto t2 = std::chrono::steady_clock::now();

  RunReport report;
  report.master_objective = fractional.objective;
  report.converged = fractional.converged;
  report.stats = stats;
  report.found_within_budget = best.has_value();
  if (best) {
    report.plan = std::move(*best);  // keeps the winning replication's seed
  } else {
    report.plan.seed = args.seed;
    report.plan.within_budget = false;
  }

  json j;
  j["format_version"] = kFormatVersion;
  j["instance_digest"] = instance_digest(instance);
  j["mode"] = "solve";
  j["params"] = {{"budget", instance.budget},
                 {"capacity", instance.capacity},
                 {"epsilon", args.epsilon},
                 {"replications", args.replications},
                 {"time_budget_secs", args.time_budget_secs},
                 {"seed", args.seed}};
  j["master"] = {{"objective", fractional.objective},
                 {"converged", fractional.converged},
                 {"rounds", fractional.rounds},
                 {"columns", fractional.columns_generated},
                 {"simplex_iterations", fractional.simplex_iterations}};
  j["plan"] = {{"lines_opened", report.plan.open_lines.size()},
               {"welfare", report.plan.welfare},
               {"cost", report.plan.cost},
               {"within_budget", report.found_within_budget}};
  j["alpha"] = stats.alpha;
  j["eta"] = stats.eta;
  j["mean_cost"] = stats.mean_cost;
  j["mean_welfare"] = stats.mean_welfare;
  if (args.include_timings) {
    j["timings"] = {
        {"master_secs", std::chrono::duration<double>(t1 - t0).count()},
        {"rounding_secs", std::chrono::duration<double>(t2 - t1).count()},
        {"total_secs", std::chrono::duration<double>(t2 - t0).count()}};
  } else {
    j["timings"] = nullptr;
  }
  report.report_json = j.dump(2) + "\n";
  return report;
}

std::string plan_to_geojson(const Instance& instance, const LinePlan& plan) {
  if (!instance.network)
    throw std::runtime_error("geo export requires an instance with a network");
  if (!instance.network->has_coords())
    throw std::runtime_error("geo export requires node coordinates");
  const Network& net = *instance.network;
  const InstanceIndex index(instance);

  // Peak per-edge load per open line, from the assignment.
  std::map<LineId, std::vector<int>> usage;
  std::map<LineId, const OpenLine*> open_of_member;
  std::map<LineId, int> passengers_of;
  for (const auto& o : plan.open_lines) {
    const Line& line = instance.lines[index.line_pos(o.line)];
    usage[o.line].assign(line.route.size(), 0);
    for (LineId m : o.members) open_of_member[m] = &o;
  }
  for (const auto& a : plan.assignment) {
    auto it = open_of_member.find(a.line);
    if (it == open_of_member.end()) continue;
    const ValueEntry* e = index.entry(a.line, a.passenger);
    if (e == nullptr) continue;
    auto& use = usage[it->second->line];
    for (int k = e->sub_route.first;
         k <= e->sub_route.last && k < static_cast<int>(use.size()); ++k)
      ++use[k];
    ++passengers_of[it->second->line];
  }

  json features = json::array();
  for (const auto& o : plan.open_lines) {
    const Line& line = instance.lines[index.line_pos(o.line)];
    const auto nodes = route_nodes(net, line.route);
    json coords = json::array();
    for (NodeId n : nodes)
      coords.push_back({net.node_coords[n][0], net.node_coords[n][1]});
    int peak = 0;
    for (int u : usage[o.line]) peak = std::max(peak, u);
    json feature;
    feature["type"] = "Feature";
    feature["geometry"] = {{"type", "LineString"}, {"coordinates", coords}};
    feature["properties"] = {{"line", o.line},
                             {"members", o.members},
                             {"frequency", o.frequency},
                             {"cost", o.cost},
                             {"peak_load", peak},
                             {"passengers", passengers_of[o.line]}};
    features.push_back(std::move(feature));
  }
  json j;
  j["type"] = "FeatureCollection";
  j["features"] = std::move(features);
  return j.dump(2) + "\n";
}

void export_plan_geo(const Instance& instance, const LinePlan& plan,
                     const std::string& path) {
  write_file(path, plan_to_geojson(instance, plan));
}

}  // namespace rlpp
