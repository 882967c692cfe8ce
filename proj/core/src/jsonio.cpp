#include "pwt/jsonio.hpp"

#include <fstream>
#include <sstream>

namespace pwt {

using nlohmann::json;

json instance_to_json(const Instance& instance, const json& meta) {
  json items = json::array();
  for (const Item& it : instance.items())
    items.push_back({{"city", it.city}, {"profit", it.profit}, {"weight", it.weight}});
  json j{{"schema", "pwt.instance/1"},
         {"distances", instance.distances()},
         {"capacity", instance.capacity()},
         {"v_min", instance.v_min()},
         {"v_max", instance.v_max()},
         {"rent", instance.rent()},
         {"items", std::move(items)}};
  if (!meta.empty()) j["meta"] = meta;
  return j;
}

InstanceFile instance_from_json(const json& j) {
  if (!j.is_object() || j.value("schema", "") != "pwt.instance/1")
    throw ParseError("not a pwt.instance/1 document");
  std::vector<double> distances = j.at("distances").get<std::vector<double>>();
  const int n = static_cast<int>(distances.size());
  std::vector<std::vector<Item>> per_city(static_cast<std::size_t>(n));
  for (const json& it : j.at("items")) {
    const int city = it.at("city").get<int>();
    if (city < 1 || city > n) throw ParseError("item city out of range");
    per_city[static_cast<std::size_t>(city - 1)].push_back(
        {it.at("profit").get<double>(), it.at("weight").get<double>(), 0, 0});
  }
  Instance instance(std::move(distances), std::move(per_city),
                    j.at("capacity").get<double>(), j.at("v_min").get<double>(),
                    j.at("v_max").get<double>(), j.at("rent").get<double>());
  return {std::move(instance), j.value("meta", json::object())};
}

InstanceFile load_instance(const std::string& instance_path, const std::string& tour_path,
                           DistanceMetric metric) {
  std::ifstream in(instance_path);
  if (!in) throw ParseError("cannot open " + instance_path);
  // Sniff the first non-space character: '{' means native JSON.
  char c = 0;
  while (in.get(c) && (c == ' ' || c == '\t' || c == '\r' || c == '\n')) {
  }
  in.seekg(0);
  if (c == '{') {
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return instance_from_json(j);
  }
  TtpData raw = parse_ttp(in);
  std::vector<int> tour = tour_path.empty()
                              ? identity_tour(raw.dimension)
                              : parse_tour_file(tour_path, raw.dimension);
  return {apply_tour(raw, tour, metric), json::object()};
}

json eval_to_json(const EvalResult& result) {
  return json{{"schema", "pwt.eval/1"},
              {"objective", result.objective},
              {"travel_cost", result.travel_cost},
              {"total_profit", result.total_profit},
              {"total_weight", result.total_weight},
              {"per_leg_velocity", result.per_leg_velocity},
              {"feasible", result.feasible}};
}

json report_to_json(const PreprocessReport& report) {
  return json{{"schema", "pwt.preprocess/1"},
              {"alpha", report.alpha},
              {"ver", report.reduced_to_unconstrained ? "u" : "c"},
              {"rounds", report.rounds},
              {"compulsory", report.compulsory},
              {"unprofitable", report.unprofitable},
              {"remaining", report.remaining},
              {"per_city_compulsory_profit", report.per_city_compulsory_profit},
              {"per_city_compulsory_weight", report.per_city_compulsory_weight},
              {"per_city_max_weight", report.per_city_max_weight}};
}

json solve_to_json(const SolveResult& result, bool with_timing) {
  json j{{"schema", "pwt.solution/1"},
         {"plan", result.best_plan.to_bit_string()},
         {"objective", result.best_objective},
         {"proven_optimal", result.proven_optimal},
         {"nodes_expanded", result.nodes_expanded},
         {"upper_bound", result.upper_bound},
         {"gap", result.relative_gap}};
  // Timing sits on its own key so deterministic output can drop it wholesale.
  if (with_timing) j["timing"] = {{"seconds", result.wall_seconds}};
  return j;
}

}  // namespace pwt
