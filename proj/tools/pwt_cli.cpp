// Command line front end: evaluate, preprocess, solve, oracle, emit-enkp,
// emit-ankp, gen-ssp, bench.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pwt/ankp.hpp"
#include "pwt/bnb.hpp"
#include "pwt/enkp.hpp"
#include "pwt/jsonio.hpp"
#include "pwt/mip.hpp"
#include "pwt/preprocess.hpp"
#include "pwt/reduction.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kToolVersion = "pwt 1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotOptimal = 3;

struct CommonOpts {
  std::string instance_path;
  std::string tour_path;
  std::string metric = "ceil2d";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--instance", opts.instance_path, "Instance file (native JSON or TTP)")
      ->required();
  cmd->add_option("--tour", opts.tour_path, "Tour file for TTP instances");
  cmd->add_option("--metric", opts.metric, "Distance rounding for TTP coordinates")
      ->check(CLI::IsMember({"ceil2d", "euclid"}));
}

pwt::InstanceFile load(const CommonOpts& opts) {
  const auto metric = opts.metric == "euclid" ? pwt::DistanceMetric::Euclid
                                              : pwt::DistanceMetric::Ceil2D;
  return pwt::load_instance(opts.instance_path, opts.tour_path, metric);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pwt::ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pwt::Error("cannot write " + path);
  out << content;
}

json enkp_sidecar(const pwt::Instance& instance, const pwt::PreprocessReport& report,
                  const pwt::MipModel& model, const pwt::EnkpOptions& options) {
  json xs = json::array();
  for (std::size_t g : report.remaining) {
    const pwt::Item& it = instance.item(g);
    xs.push_back({{"name", "x_" + std::to_string(it.city) + "_" + std::to_string(it.slot)},
                  {"city", it.city},
                  {"slot", it.slot},
                  {"item_index", g}});
  }
  return json{{"schema", "pwt.enkp-meta/1"},
              {"objective_constant", model.objective_constant()},
              {"options", {{"rlt", options.rlt}, {"dominance", options.dominance}}},
              {"x_variables", std::move(xs)}};
}

json ankp_sidecar(const pwt::Instance& instance, const pwt::PreprocessReport& report,
                  const pwt::SegmentSet& segments, int tau) {
  json xs = json::array();
  for (std::size_t g : report.remaining) {
    const pwt::Item& it = instance.item(g);
    xs.push_back({{"name", "x_" + std::to_string(it.city) + "_" + std::to_string(it.slot)},
                  {"city", it.city},
                  {"slot", it.slot},
                  {"item_index", g}});
  }
  json ys = json::array();
  for (int i = 1; i <= instance.num_legs(); ++i)
    for (int b : segments.active_breakpoints[static_cast<std::size_t>(i - 1)])
      ys.push_back({{"name", "y_" + std::to_string(i) + "_" + std::to_string(b)},
                    {"city", i},
                    {"breakpoint", b},
                    {"velocity", segments.breakpoints[static_cast<std::size_t>(b)].velocity},
                    {"time", segments.breakpoints[static_cast<std::size_t>(b)].time}});
  return json{{"schema", "pwt.ankp-meta/1"},
              {"tau", tau},
              {"beta", pwt::beta(segments)},
              {"x_variables", std::move(xs)},
              {"y_variables", std::move(ys)}};
}

struct BenchRow {
  std::string id;
  std::size_t m = 0;
  double alpha = 0.0;
  char ver = 'c';
  double objective = 0.0;
  double gap = 0.0;
  double seconds = 0.0;
  std::string plan;
  bool optimal = false;
};

int run_bench(const std::string& dir, const std::string& out_path, int jobs,
              double time_limit, std::uint64_t node_limit, const std::string& metric) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = entry.path().extension().string();
    if (ext == ".json" || ext == ".ttp") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  auto worker = [&](const fs::path& path) {
    CommonOpts opts;
    opts.instance_path = path.string();
    opts.metric = metric;
    const fs::path tour = fs::path(path).replace_extension(".tour");
    if (fs::exists(tour)) opts.tour_path = tour.string();
    pwt::InstanceFile file = load(opts);
    pwt::PreprocessReport report = pwt::preprocess(file.instance);
    pwt::SolveLimits limits;
    limits.time_seconds = time_limit;
    limits.node_budget = node_limit;
    pwt::SolveResult solved = pwt::solve_bb(file.instance, report, limits);
    BenchRow row;
    row.id = path.stem().string();
    row.m = file.instance.num_items();
    row.alpha = report.alpha;
    row.ver = report.reduced_to_unconstrained ? 'u' : 'c';
    row.objective = solved.best_objective;
    row.gap = solved.relative_gap;
    row.seconds = solved.wall_seconds;
    row.plan = solved.best_plan.to_bit_string();
    row.optimal = solved.proven_optimal;
    return row;
  };

  std::vector<BenchRow> rows(files.size());
  std::size_t next = 0;
  while (next < files.size()) {
    const std::size_t batch = std::min<std::size_t>(
        static_cast<std::size_t>(std::max(jobs, 1)), files.size() - next);
    std::vector<std::future<BenchRow>> futures;
    for (std::size_t i = 0; i < batch; ++i)
      futures.push_back(std::async(std::launch::async, worker, files[next + i]));
    for (std::size_t i = 0; i < batch; ++i) rows[next + i] = futures[i].get();
    next += batch;
  }

  std::ostringstream csv;
  csv << "instance,m,alpha,ver,objective,gap,t,beta,plan,version\n";
  for (const BenchRow& row : rows) {
    csv << row.id << ',' << row.m << ',' << pwt::format_coefficient(row.alpha) << ','
        << row.ver << ',' << pwt::format_coefficient(row.objective) << ','
        << pwt::format_coefficient(row.gap) << ',' << pwt::format_coefficient(row.seconds)
        << ",," << row.plan << ',' << kToolVersion << "\n";
  }
  write_file(out_path, csv.str());
  std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Packing-while-traveling toolkit"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  // evaluate
  CommonOpts eval_opts;
  std::string plan_arg, plan_file;
  CLI::App* cmd_eval = app.add_subcommand("evaluate", "Evaluate a packing plan exactly");
  add_common(cmd_eval, eval_opts);
  cmd_eval->add_option("--plan", plan_arg, "Plan as a 0/1 string");
  cmd_eval->add_option("--plan-file", plan_file, "File containing a 0/1 plan string");

  // preprocess
  CommonOpts pre_opts;
  CLI::App* cmd_pre = app.add_subcommand("preprocess", "Run the reduction fixpoint");
  add_common(cmd_pre, pre_opts);

  // solve
  CommonOpts solve_opts;
  double time_limit = 1e18;
  std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
  bool fractional = false;
  CLI::App* cmd_solve = app.add_subcommand("solve", "Branch-and-bound exact solve");
  add_common(cmd_solve, solve_opts);
  cmd_solve->add_option("--time-limit", time_limit, "Seconds");
  cmd_solve->add_option("--node-limit", node_limit, "Node budget");
  cmd_solve->add_flag("--fractional-bound", fractional,
                      "Tighten node bounds with a fractional knapsack");

  // oracle
  CommonOpts oracle_opts;
  CLI::App* cmd_oracle = app.add_subcommand("oracle", "Exhaustive enumeration (m <= 24)");
  add_common(cmd_oracle, oracle_opts);

  // emit-enkp
  CommonOpts enkp_opts;
  bool rlt = false, dominance = false;
  std::string enkp_out;
  CLI::App* cmd_enkp = app.add_subcommand("emit-enkp", "Write the exact MIP as an LP file");
  add_common(cmd_enkp, enkp_opts);
  cmd_enkp->add_flag("--rlt", rlt, "Add the 3n capacity RLT inequalities");
  cmd_enkp->add_flag("--dominance", dominance, "Add pairwise dominance cuts");
  cmd_enkp->add_option("--out", enkp_out, "Output .lp path")->required();

  // emit-ankp
  CommonOpts ankp_opts;
  int tau = 100;
  std::string ankp_out;
  CLI::App* cmd_ankp =
      app.add_subcommand("emit-ankp", "Write the piecewise-linear MIP as an LP file");
  add_common(cmd_ankp, ankp_opts);
  cmd_ankp->add_option("--tau", tau, "Segment count")->check(CLI::PositiveNumber);
  cmd_ankp->add_option("--out", ankp_out, "Output .lp path")->required();

  // gen-ssp
  std::string ssp_values;
  std::int64_t ssp_target = 0;
  std::string ssp_out;
  CLI::App* cmd_ssp =
      app.add_subcommand("gen-ssp", "Encode a subset-sum instance as an unconstrained instance");
  cmd_ssp->add_option("--values", ssp_values, "Comma-separated positive integers")->required();
  cmd_ssp->add_option("--target", ssp_target, "Subset-sum target")->required();
  cmd_ssp->add_option("--out", ssp_out, "Instance output path (default: stdout)");

  // bench
  std::string bench_dir, bench_out;
  int jobs = 4;
  double bench_time = 10.0;
  std::uint64_t bench_nodes = std::numeric_limits<std::uint64_t>::max();
  std::string bench_metric = "ceil2d";
  CLI::App* cmd_bench = app.add_subcommand("bench", "Preprocess + solve a directory of instances");
  cmd_bench->add_option("--dir", bench_dir, "Directory of .json / .ttp instances")->required();
  cmd_bench->add_option("--out", bench_out, "CSV output path")->required();
  cmd_bench->add_option("--jobs", jobs, "Worker threads");
  cmd_bench->add_option("--time-limit", bench_time, "Per-instance seconds");
  cmd_bench->add_option("--node-limit", bench_nodes, "Per-instance node budget");
  cmd_bench->add_option("--metric", bench_metric, "Distance rounding for TTP files")
      ->check(CLI::IsMember({"ceil2d", "euclid"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_eval->parsed()) {
      pwt::InstanceFile file = load(eval_opts);
      std::string bits = plan_arg;
      if (!plan_file.empty()) bits = read_file(plan_file);
      pwt::PackingPlan plan = pwt::PackingPlan::from_bit_string(bits);
      print_json(pwt::eval_to_json(pwt::evaluate(file.instance, plan)));
      return kExitOk;
    }
    if (cmd_pre->parsed()) {
      pwt::InstanceFile file = load(pre_opts);
      print_json(pwt::report_to_json(pwt::preprocess(file.instance)));
      return kExitOk;
    }
    if (cmd_solve->parsed()) {
      pwt::InstanceFile file = load(solve_opts);
      pwt::PreprocessReport report = pwt::preprocess(file.instance);
      pwt::SolveLimits limits;
      limits.time_seconds = time_limit;
      limits.node_budget = node_limit;
      limits.fractional_bound = fractional;
      pwt::SolveResult solved = pwt::solve_bb(file.instance, report, limits);
      json j = pwt::solve_to_json(solved);
      j["alpha"] = report.alpha;
      j["ver"] = report.reduced_to_unconstrained ? "u" : "c";
      print_json(j);
      return solved.proven_optimal ? kExitOk : kExitNotOptimal;
    }
    if (cmd_oracle->parsed()) {
      pwt::InstanceFile file = load(oracle_opts);
      pwt::SolveResult solved = pwt::solve_oracle(file.instance);
      json j = pwt::solve_to_json(solved);
      if (file.meta.contains("ssp_threshold_b")) {
        const double b = file.meta["ssp_threshold_b"].get<double>();
        j["threshold_b"] = b;
        j["decision"] = solved.best_objective >= b - 1e-9 ? "YES" : "NO";
      }
      print_json(j);
      return kExitOk;
    }
    if (cmd_enkp->parsed()) {
      pwt::InstanceFile file = load(enkp_opts);
      pwt::PreprocessReport report = pwt::preprocess(file.instance);
      pwt::EnkpOptions options{rlt, dominance};
      pwt::MipModel model = pwt::build_enkp(file.instance, report, options);
      write_file(enkp_out, pwt::write_lp_string(model));
      write_file(enkp_out + ".meta.json",
                 enkp_sidecar(file.instance, report, model, options).dump(2) + "\n");
      std::cout << "wrote " << enkp_out << " (" << model.variables().size()
                << " variables, " << model.constraints().size() << " constraints)\n";
      return kExitOk;
    }
    if (cmd_ankp->parsed()) {
      pwt::InstanceFile file = load(ankp_opts);
      pwt::PreprocessReport report = pwt::preprocess(file.instance);
      pwt::SegmentSet segments = pwt::build_segment_set(file.instance, report, tau);
      pwt::MipModel model = pwt::build_ankp(file.instance, report, tau);
      write_file(ankp_out, pwt::write_lp_string(model));
      write_file(ankp_out + ".meta.json",
                 ankp_sidecar(file.instance, report, segments, tau).dump(2) + "\n");
      std::cout << "beta " << pwt::format_coefficient(pwt::beta(segments)) << "\n";
      return kExitOk;
    }
    if (cmd_ssp->parsed()) {
      pwt::SspInstance ssp;
      ssp.target = ssp_target;
      std::stringstream ss(ssp_values);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) ssp.values.push_back(std::stoll(tok));
      pwt::SspReduction red = pwt::ssp_to_nkpu(ssp);
      json meta{{"ssp_threshold_b", red.threshold_b},
                {"ssp_values", ssp.values},
                {"ssp_target", ssp.target}};
      const json doc = pwt::instance_to_json(red.instance, meta);
      if (ssp_out.empty())
        print_json(doc);
      else
        write_file(ssp_out, doc.dump(2) + "\n");
      std::cout << "threshold_b: " << pwt::format_coefficient(red.threshold_b) << "\n";
      return kExitOk;
    }
    if (cmd_bench->parsed()) {
      return run_bench(bench_dir, bench_out, jobs, bench_time, bench_nodes, bench_metric);
    }
  } catch (const pwt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const pwt::InvalidPermutation& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
