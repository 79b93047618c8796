#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "lpp/analysis.hpp"
#include "lpp/campaign.hpp"
#include "lpp/dfs.hpp"
#include "lpp/error.hpp"
#include "lpp/exact.hpp"
#include "lpp/graph.hpp"
#include "lpp/paths.hpp"
#include "lpp/report.hpp"
#include "lpp/version.hpp"

namespace lpp::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxTraceN = 64;

constexpr const char* kGenFooter = R"(CSV output (weights): "i,j,weight", one row per edge of K_n.
CSV output (--p): edge list, "# n=N" then one "i j" pair per line.
The first line of every output is "# config=<json>".)";

constexpr const char* kExactFooter =
    R"(CSV columns: n,value,witness_length,witness (witness quoted, comma-joined).)";

constexpr const char* kLowerBoundFooter =
    R"(CSV columns: n,value,threshold,path_length,excursion_length,path.
Without --tau the grid is the empirical weight quantiles 0.05, 0.10, ..., 0.95.)";

constexpr const char* kTraceFooter =
    R"(CSV columns: step,S,U,T,Ehat. One row per step 1..N. S and T ascending,
U in stack order, Ehat as "i-j" pairs in exploration order, lists ';'-joined.
--summary CSV columns: n,edges,excursion_length,excursion.)";

constexpr const char* kBoundsFooter = R"(CSV columns: quantity,value.)";

constexpr const char* kCampaignFooter =
    R"(CSV output starts with "# schema=1 config=<json>", then one row per n.
time-constant: n,mode,replicates,mean,variance,ci_half_width,min,max,variance_wn
deviation:     n,replicates,events,p_hat,std_error,ln_p_hat,ln_ci_low,ln_ci_high,
               analytic_floor,log_upper_bound,insufficient,floor_respected
sandwich:      n,replicates,f_n,g_n,freq_upper,freq_upper_std_error,
               union_bound_prediction,ratio_mean,ratio_min,ratio_max,
               paths_valid,values_within_cap
Bound checks and the rate fit are in the JSON output only.)";

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

Json path_json(const Path& p) { return Json(p.vertices()); }

struct Options {
  std::string dist;
  int n = 0;
  std::optional<std::uint64_t> seed;
  std::string format;
  std::string output;
  std::string weights_file;
  std::string graph_file;
  std::optional<double> p;
  std::vector<double> taus;
  std::string method = "dp";
  bool summary = false;
  std::optional<double> x;
  std::optional<double> epsilon;
  std::optional<double> theta;
  std::string kind;
  std::vector<int> n_list;
  std::size_t replicates = 0;
  unsigned jobs = 0;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err) {}

  void gen();
  void exact();
  void lower_bound();
  void dfs_trace();
  void bounds();
  void campaign();

 private:
  std::uint64_t seed() {
    if (!resolved_seed_) {
      if (opt_.seed) {
        resolved_seed_ = *opt_.seed;
      } else {
        std::random_device device;
        resolved_seed_ = (static_cast<std::uint64_t>(device()) << 32) ^ device();
        err_ << "seed=" << *resolved_seed_ << '\n';
      }
    }
    return *resolved_seed_;
  }

  Json config(const char* command) const {
    Json c;
    c["command"] = command;
    return c;
  }

  void require(bool ok, const std::string& message) const {
    if (!ok) throw ParseError(message);
  }

  std::string format(const char* fallback) const {
    return opt_.format.empty() ? fallback : opt_.format;
  }

  std::ifstream open_input(const std::string& path) const {
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open '" + path + "'");
    return in;
  }

  // Weights from --weights or from (--dist, --n, --seed). Fills the echo.
  EdgeWeights instance(Json& c) {
    if (!opt_.weights_file.empty()) {
      require(opt_.dist.empty() && opt_.n == 0 && !opt_.seed,
              "--weights excludes --dist, --n and --seed");
      auto in = open_input(opt_.weights_file);
      EdgeWeights w = read_weights_csv(in);
      c["weights"] = {{"n", w.n()},
                      {"values", std::vector<double>(w.values().begin(),
                                                     w.values().end())}};
      c["seed"] = nullptr;
      return w;
    }
    require(!opt_.dist.empty(), "need --weights or --dist");
    require(opt_.n != 0, "need --n");
    const WeightDistribution dist = WeightDistribution::parse(opt_.dist);
    c["dist"] = dist.to_string();
    c["n"] = opt_.n;
    c["seed"] = seed();
    Rng rng = replicate_rng(seed(), static_cast<std::uint64_t>(opt_.n), 0);
    return sample_weights(opt_.n, dist, rng);
  }

  void emit(const std::string& text) const {
    if (opt_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(opt_.output, std::ios::binary);
    require(static_cast<bool>(file), "cannot write '" + opt_.output + "'");
    file << text;
  }

  void emit_json(Json body) const { emit(body.dump(2) + "\n"); }

  static std::string echo_line(const Json& c) {
    return "# config=" + c.dump() + "\n";
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<std::uint64_t> resolved_seed_;
};

void Runner::gen() {
  require(opt_.n != 0, "need --n");
  require(opt_.dist.empty() != !opt_.p.has_value(),
          "gen needs exactly one of --dist or --p");
  Json c = config("gen");
  const std::string fmt = format("csv");
  Rng rng = replicate_rng(seed(), static_cast<std::uint64_t>(opt_.n), 0);
  if (opt_.p) {
    c["p"] = *opt_.p;
    c["n"] = opt_.n;
    c["seed"] = seed();
    c["format"] = fmt;
    const SimpleGraph g = sample_gnp(opt_.n, *opt_.p, rng);
    if (fmt == "csv") {
      std::ostringstream text;
      text << echo_line(c);
      write_edge_list(text, g);
      emit(text.str());
      return;
    }
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.lo, e.hi});
    emit_json({{"schema", kReportSchema}, {"config", c}, {"n", g.n()},
               {"edges", edges}});
    return;
  }
  const WeightDistribution dist = WeightDistribution::parse(opt_.dist);
  c["dist"] = dist.to_string();
  c["n"] = opt_.n;
  c["seed"] = seed();
  c["format"] = fmt;
  const EdgeWeights w = sample_weights(opt_.n, dist, rng);
  if (fmt == "csv") {
    std::ostringstream text;
    text << echo_line(c);
    write_weights_csv(text, w);
    emit(text.str());
    return;
  }
  Json edges = Json::array();
  for (Vertex i = 1; i < w.n(); ++i) {
    for (Vertex j = i + 1; j <= w.n(); ++j) edges.push_back({i, j, w(i, j)});
  }
  emit_json({{"schema", kReportSchema}, {"config", c}, {"n", w.n()},
             {"edges", edges}});
}

void Runner::exact() {
  Json c = config("exact");
  c["method"] = opt_.method;
  const EdgeWeights w = instance(c);
  const std::string fmt = format("json");
  c["format"] = fmt;
  const ExactResult r =
      opt_.method == "brute" ? brute_force_wn(w) : exact_wn(w);
  if (fmt == "csv") {
    emit(echo_line(c) + "n,value,witness_length,witness\n" +
         std::to_string(w.n()) + "," + num(r.value) + "," +
         std::to_string(r.witness.length()) + "," +
         quoted(r.witness.to_string()) + "\n");
    return;
  }
  emit_json({{"schema", kReportSchema},
             {"config", c},
             {"n", w.n()},
             {"value", r.value},
             {"witness", path_json(r.witness)},
             {"witness_length", r.witness.length()}});
}

void Runner::lower_bound() {
  Json c = config("lower-bound");
  const EdgeWeights w = instance(c);
  const std::string fmt = format("json");
  std::vector<double> grid = opt_.taus;
  if (grid.empty()) {
    c["tau"] = "default-quantiles";
    grid = default_tau_grid(w);
  } else {
    c["tau"] = grid;
  }
  c["format"] = fmt;
  const LowerBound lb = best_threshold_lower_bound(w, grid);
  if (fmt == "csv") {
    emit(echo_line(c) +
         "n,value,threshold,path_length,excursion_length,path\n" +
         std::to_string(w.n()) + "," + num(lb.value) + "," +
         num(lb.threshold) + "," + std::to_string(lb.path.length()) + "," +
         std::to_string(lb.excursion.length()) + "," +
         quoted(lb.path.to_string()) + "\n");
    return;
  }
  emit_json({{"schema", kReportSchema},
             {"config", c},
             {"n", w.n()},
             {"value", lb.value},
             {"threshold", lb.threshold},
             {"path", path_json(lb.path)},
             {"path_length", lb.path.length()},
             {"excursion", path_json(lb.excursion)},
             {"excursion_length", lb.excursion.length()},
             {"grid", grid}});
}

void Runner::dfs_trace() {
  Json c = config("dfs-trace");
  std::optional<SimpleGraph> graph;
  if (!opt_.graph_file.empty()) {
    require(!opt_.p && opt_.n == 0 && !opt_.seed,
            "--graph excludes --n, --p and --seed");
    auto in = open_input(opt_.graph_file);
    graph = read_edge_list(in);
    Json edges = Json::array();
    for (const Edge& e : graph->edges()) edges.push_back({e.lo, e.hi});
    c["graph"] = {{"n", graph->n()}, {"edges", edges}};
    c["seed"] = nullptr;
  } else {
    require(opt_.n != 0 && opt_.p.has_value(),
            "need --graph or both --n and --p");
    c["n"] = opt_.n;
    c["p"] = *opt_.p;
    c["seed"] = seed();
    Rng rng = replicate_rng(seed(), static_cast<std::uint64_t>(opt_.n), 0);
    graph = sample_gnp(opt_.n, *opt_.p, rng);
  }
  const std::string fmt = format("csv");
  c["summary"] = opt_.summary;
  c["format"] = fmt;

  if (opt_.summary) {
    const Path excursion = longest_dfs_excursion(*graph);
    if (fmt == "csv") {
      emit(echo_line(c) + "n,edges,excursion_length,excursion\n" +
           std::to_string(graph->n()) + "," +
           std::to_string(graph->edge_count()) + "," +
           std::to_string(excursion.length()) + "," +
           quoted(excursion.to_string()) + "\n");
      return;
    }
    emit_json({{"schema", kReportSchema},
               {"config", c},
               {"n", graph->n()},
               {"edges", graph->edge_count()},
               {"excursion", path_json(excursion)},
               {"excursion_length", excursion.length()}});
    return;
  }

  if (graph->n() > kMaxTraceN) {
    throw PreconditionError("full traces need n <= " +
                            std::to_string(kMaxTraceN) + "; use --summary");
  }
  const DfsTrace trace = run_dfs(*graph, TraceMode::kFull);
  if (fmt == "csv") {
    std::ostringstream text;
    text << echo_line(c);
    write_trace_csv(text, trace);
    emit(text.str());
    return;
  }
  Json epochs = Json::array();
  for (const DfsEpoch& e : trace.epochs()) {
    epochs.push_back({{"start_step", e.start_step},
                      {"end_step", e.end_step},
                      {"component", e.component}});
  }
  Json states = Json::array();
  for (const DfsState& s : trace.states()) {
    if (s.step == 0) continue;
    Json explored = Json::array();
    for (const Edge& e : s.explored) explored.push_back({e.lo, e.hi});
    states.push_back({{"step", s.step},
                      {"S", s.completed},
                      {"U", s.stack},
                      {"T", s.unvisited},
                      {"Ehat", explored}});
  }
  const Path excursion = longest_u_excursion(trace);
  emit_json({{"schema", kReportSchema},
             {"config", c},
             {"n", graph->n()},
             {"step_count", trace.step_count()},
             {"epochs", epochs},
             {"longest_excursion", path_json(excursion)},
             {"states", states}});
}

void Runner::bounds() {
  require(!opt_.dist.empty(), "need --dist");
  require(opt_.n != 0, "need --n");
  const WeightDistribution dist = WeightDistribution::parse(opt_.dist);
  const std::int64_t n = opt_.n;
  const ExtendedReal mu = essential_supremum(dist);
  Json c = config("bounds");
  c["dist"] = dist.to_string();
  c["n"] = opt_.n;
  c["x"] = opt_.x ? Json(*opt_.x) : Json(nullptr);
  c["epsilon"] = opt_.epsilon ? Json(*opt_.epsilon) : Json("optimized");
  c["theta"] = opt_.theta ? Json(*opt_.theta) : Json(nullptr);
  c["seed"] = nullptr;
  const std::string fmt = format("json");
  c["format"] = fmt;

  // (name, value) in output order; JSON nests the deviation group.
  std::vector<std::pair<std::string, double>> rows;
  Json body{{"schema", kReportSchema}, {"config", c}};
  body["mu"] = mu.is_finite() ? Json(mu.value()) : Json("inf");
  rows.push_back({"mu", mu.is_finite() ? mu.value()
                                       : std::numeric_limits<double>::infinity()});

  if (!dist.bounded()) {
    if (n >= 3) {
      body["f_n"] = f_of_n(dist, n);
      rows.push_back({"f_n", body["f_n"].get<double>()});
    }
    if (n >= 16) {
      const double g = g_of_n(dist, n);
      body["g_n"] = g;
      body["union_bound_failure"] = static_cast<double>(n) * n * tail(dist, g);
      rows.push_back({"g_n", g});
      rows.push_back({"union_bound_failure", body["union_bound_failure"].get<double>()});
    }
  }
  if (opt_.x) {
    const double eps =
        opt_.epsilon ? *opt_.epsilon : optimize_epsilon(dist, *opt_.x, n);
    const DeviationConstants k = deviation_constants(dist, *opt_.x, eps);
    const auto nd = static_cast<double>(n);
    body["deviation"] = {{"x", k.x},
                         {"p", k.p},
                         {"epsilon", k.epsilon},
                         {"x_prime", k.x_prime},
                         {"C1", k.big_c1},
                         {"C2", k.big_c2},
                         {"c1", k.small_c1},
                         {"c2", k.small_c2},
                         {"log_upper_bound", log_upper_bound(k, nd)},
                         {"log_lower_bound", log_lower_bound(k, nd)}};
    for (const auto& [key, value] : body["deviation"].items()) {
      rows.push_back({key, value.get<double>()});
    }
  } else if (opt_.epsilon) {
    throw ParseError("--epsilon needs --x");
  }
  if (dist.bounded()) {
    if (dist.kind() != WeightKind::kTwoPoint && n >= 3) {
      body["xbar"] = xbar(dist, n);
      rows.push_back({"xbar", body["xbar"].get<double>()});
    }
    body["variance_upper_bound"] = variance_upper_bound(dist, n);
    rows.push_back({"variance_upper_bound", body["variance_upper_bound"].get<double>()});
  }
  if (opt_.theta) {
    body["aks_reference_length"] = aks_reference_length(*opt_.theta, n);
    rows.push_back({"aks_reference_length", body["aks_reference_length"].get<double>()});
  }

  if (fmt == "csv") {
    std::string text = echo_line(c) + "quantity,value\n";
    for (const auto& [key, value] : rows) text += key + "," + num(value) + "\n";
    emit(text);
    return;
  }
  emit_json(body);
}

void Runner::campaign() {
  require(!opt_.kind.empty(), "need --kind");
  require(!opt_.dist.empty(), "need --dist");
  require(!opt_.n_list.empty(), "need --n-list");
  require(opt_.replicates != 0, "need --replicates");
  CampaignConfig config;
  config.kind = parse_campaign_kind(opt_.kind);
  config.dist = WeightDistribution::parse(opt_.dist);
  config.n_list = opt_.n_list;
  config.replicates = opt_.replicates;
  config.seed = seed();
  if (config.kind == CampaignKind::kDeviation) {
    require(opt_.x.has_value(), "deviation campaigns need --x");
    config.x = *opt_.x;
  } else {
    require(!opt_.x, "--x applies to deviation campaigns only");
  }
  config.jobs = opt_.jobs != 0 ? opt_.jobs
                               : std::max(1U, std::thread::hardware_concurrency());
  const CampaignReport report = run_campaign(config);
  emit(format("json") == "csv" ? to_csv(report) : to_json(report));
}

void add_format(CLI::App* sub, Options& opt, const char* fallback) {
  sub->add_option("--format", opt.format,
                  std::string("json or csv (default ") + fallback + ")")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--output", opt.output, "write here instead of stdout");
}

void add_instance(CLI::App* sub, Options& opt) {
  sub->add_option("--weights", opt.weights_file,
                  "weights CSV (i,j,weight) instead of sampling");
  sub->add_option("--dist", opt.dist, "weight law, e.g. exp:lambda=1");
  sub->add_option("--n", opt.n, "vertex count")->check(CLI::PositiveNumber);
  sub->add_option("--seed", opt.seed, "64-bit seed (drawn and printed if absent)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Last-passage percolation on the complete graph"};
  app.name(args.empty() ? "lpp" : args.front());
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "sample edge weights or a G(n,p) graph");
  gen->add_option("--dist", opt.dist, "weight law, e.g. uniform:lo=0,hi=1");
  gen->add_option("--p", opt.p, "edge probability: emit a G(n,p) edge list");
  gen->add_option("--n", opt.n, "vertex count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", opt.seed, "64-bit seed (drawn and printed if absent)");
  add_format(gen, opt, "csv");
  gen->footer(kGenFooter);

  auto* exact = app.add_subcommand("exact", "exact W_n (subset DP, n <= 22)");
  add_instance(exact, opt);
  exact->add_option("--method", opt.method, "dp (n <= 22) or brute (n <= 10)")
      ->check(CLI::IsMember({"dp", "brute"}));
  add_format(exact, opt, "json");
  exact->footer(kExactFooter);

  auto* lower = app.add_subcommand("lower-bound",
                                   "threshold, DFS and surgery lower bound");
  add_instance(lower, opt);
  lower->add_option("--tau", opt.taus, "threshold(s); repeat or comma-separate")
      ->delimiter(',');
  add_format(lower, opt, "json");
  lower->footer(kLowerBoundFooter);

  auto* trace = app.add_subcommand("dfs-trace", "state-by-state DFS run");
  trace->add_option("--graph", opt.graph_file, "edge list file");
  trace->add_option("--n", opt.n, "vertex count for a G(n,p) draw")
      ->check(CLI::PositiveNumber);
  trace->add_option("--p", opt.p, "edge probability for a G(n,p) draw");
  trace->add_option("--seed", opt.seed, "64-bit seed (drawn and printed if absent)");
  trace->add_flag("--summary", opt.summary,
                  "only the longest excursion (any n); full traces need n <= 64");
  add_format(trace, opt, "csv");
  trace->footer(kTraceFooter);

  auto* bounds = app.add_subcommand("bounds", "closed-form bound calculators");
  bounds->add_option("--dist", opt.dist, "weight law")->required();
  bounds->add_option("--n", opt.n, "vertex count")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--x", opt.x, "deviation x in (0, mu)");
  bounds->add_option("--epsilon", opt.epsilon, "epsilon (default: optimized for n)");
  bounds->add_option("--theta", opt.theta, "theta for the reference path length");
  add_format(bounds, opt, "json");
  bounds->footer(kBoundsFooter);

  auto* campaign = app.add_subcommand("campaign", "seeded Monte Carlo campaigns");
  campaign->add_option("--kind", opt.kind, "time-constant, deviation or sandwich")
      ->check(CLI::IsMember({"time-constant", "deviation", "sandwich"}));
  campaign->add_option("--dist", opt.dist, "weight law");
  campaign->add_option("--n-list", opt.n_list, "comma-separated vertex counts")
      ->delimiter(',');
  campaign->add_option("--replicates", opt.replicates, "replicates per n")
      ->check(CLI::PositiveNumber);
  campaign->add_option("--seed", opt.seed, "64-bit seed (drawn and printed if absent)");
  campaign->add_option("--x", opt.x, "deviation x (deviation campaigns)");
  campaign->add_option("--jobs", opt.jobs, "worker threads (default: all cores)");
  add_format(campaign, opt, "json");
  campaign->footer(kCampaignFooter);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Runner runner(opt, out, err);
  try {
    if (*gen) runner.gen();
    if (*exact) runner.exact();
    if (*lower) runner.lower_bound();
    if (*trace) runner.dfs_trace();
    if (*bounds) runner.bounds();
    if (*campaign) runner.campaign();
  } catch (const lpp::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace lpp::cli
