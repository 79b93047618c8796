// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lpp/analysis.hpp"
#include "lpp/campaign.hpp"
#include "lpp/dfs.hpp"
#include "lpp/exact.hpp"
#include "lpp/paths.hpp"
#include "lpp/report.hpp"

namespace {

using lpp::EdgeWeights;
using lpp::SimpleGraph;
using lpp::WeightDistribution;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

unsigned jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

const std::vector<WeightDistribution>& kinds() {
  static const std::vector<WeightDistribution> k{
      WeightDistribution::two_point(1, 2, 0.05),
      WeightDistribution::uniform(0, 1), WeightDistribution::exponential(1),
      WeightDistribution::pareto(2)};
  return k;
}

// Expected states for the five-vertex graph with edges 14, 23, 25, 35.
constexpr const char* kFiveVertexTable = R"(step,S,U,T,Ehat
1,,1,2;3;4;5,
2,,1,2;3;4;5,1-2
3,,1,2;3;4;5,1-2;1-3
4,,1;4,2;3;5,1-2;1-3;1-4
5,,1;4,2;3;5,1-2;1-3;1-4;2-4
6,,1;4,2;3;5,1-2;1-3;1-4;2-4;3-4
7,,1;4,2;3;5,1-2;1-3;1-4;2-4;3-4;4-5
8,4,1,2;3;5,1-2;1-3;1-4;2-4;3-4;4-5
9,4,1,2;3;5,1-2;1-3;1-4;2-4;3-4;4-5;1-5
10,1;4,,2;3;5,1-2;1-3;1-4;2-4;3-4;4-5;1-5
11,1;4,2,3;5,1-2;1-3;1-4;2-4;3-4;4-5;1-5
12,1;4,2;3,5,1-2;1-3;1-4;2-4;3-4;4-5;1-5;2-3
13,1;4,2;3;5,,1-2;1-3;1-4;2-4;3-4;4-5;1-5;2-3;3-5
14,1;4,2;3;5,,1-2;1-3;1-4;2-4;3-4;4-5;1-5;2-3;3-5;2-5
15,1;4;5,2;3,,1-2;1-3;1-4;2-4;3-4;4-5;1-5;2-3;3-5;2-5
16,1;3;4;5,2,,1-2;1-3;1-4;2-4;3-4;4-5;1-5;2-3;3-5;2-5
17,1;2;3;4;5,,,1-2;1-3;1-4;2-4;3-4;4-5;1-5;2-3;3-5;2-5
)";

Outcome five_vertex() {
  const std::vector<lpp::Edge> edges{{1, 4}, {2, 3}, {2, 5}, {3, 5}};
  const SimpleGraph g(5, edges);
  const auto t0 = Clock::now();
  const auto trace = lpp::run_dfs(g);
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  std::ostringstream csv;
  lpp::write_trace_csv(csv, trace);
  const bool table = csv.str() == kFiveVertexTable;
  const bool shape = trace.step_count() == 17 && trace.epochs().size() == 2;
  return {table && shape && ms < 1.0,
          std::string("table ") + (table ? "identical" : "DIFFERS") +
              ", N=" + std::to_string(trace.step_count()) +
              ", epochs=" + std::to_string(trace.epochs().size()) +
              ", run " + fmt("%.3f ms", ms)};
}

Outcome oracle_equivalence() {
  lpp::Rng rng(20261016);
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  double worst = 0.0;
  for (const auto& dist : kinds()) {
    for (int trial = 0; trial < 240; ++trial) {
      const int n = 4 + trial % 6;
      const EdgeWeights w = lpp::sample_weights(n, dist, rng);
      const double dp = lpp::exact_wn(w).value;
      const double brute = lpp::brute_force_wn(w).value;
      const double rel = std::abs(dp - brute) / brute;
      worst = std::max(worst, rel);
      if (rel > 1e-9) ++mismatches;
      ++instances;
    }
  }
  return {mismatches == 0, std::to_string(instances) +
                               " instances (240 per kind, n=4..9), max rel diff " +
                               fmt("%.3g", worst)};
}

Outcome superadditivity() {
  lpp::Rng rng(12);
  lpp::SubsetDpSolver solver;
  std::size_t violations = 0;
  std::size_t comparisons = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto& dist = kinds()[static_cast<std::size_t>(trial) % kinds().size()];
    const EdgeWeights w = lpp::sample_weights(12, dist, rng);
    const double whole = solver.solve_value(w, 0, 12);
    for (int m = 2; m <= 10; ++m) {
      ++comparisons;
      if (!(whole >= solver.solve_value(w, 0, m) + solver.solve_value(w, m, 12))) {
        ++violations;
      }
    }
  }
  return {violations == 0, std::to_string(comparisons) + " comparisons, " +
                               std::to_string(violations) + " violations"};
}

Outcome long_excursions() {
  lpp::Rng rng(31);
  std::size_t draws = 0;
  std::size_t hypotheses = 0;
  std::size_t violations = 0;
  for (int n : {8, 10, 12}) {
    for (double p : {0.3, 0.5, 0.8}) {
      for (int trial = 0; trial < 25; ++trial) {
        const SimpleGraph g = lpp::sample_gnp(n, p, rng);
        ++draws;
        const auto length = lpp::longest_u_excursion(lpp::run_dfs(g)).length();
        for (int k = 1; k <= n / 2; ++k) {
          if (!lpp::check_st_edge_property(g, k)) continue;
          ++hypotheses;
          if (length < static_cast<std::size_t>(lpp::excursion_guarantee(n, k))) {
            ++violations;
          }
        }
      }
    }
  }
  return {violations == 0 && draws >= 200,
          std::to_string(draws) + " draws, " + std::to_string(hypotheses) +
              " (graph, k) pairs with the property, " +
              std::to_string(violations) + " violations"};
}

Outcome lower_bound_soundness() {
  lpp::Rng rng(5);
  lpp::SubsetDpSolver solver;
  std::size_t checks = 0;
  std::size_t violations = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 15;
    const auto& dist = kinds()[static_cast<std::size_t>(trial) % kinds().size()];
    const EdgeWeights w = lpp::sample_weights(n, dist, rng);
    const double exact = solver.solve_value(w, 0, n);
    const auto grid = lpp::default_tau_grid(w);
    for (double tau : grid) {
      ++checks;
      if (lpp::threshold_lower_bound(w, tau).value > exact) ++violations;
    }
    ++checks;
    if (lpp::best_threshold_lower_bound(w, grid).value > exact) ++violations;
  }
  return {violations == 0, "500 trials (n=2..16), " + std::to_string(checks) +
                               " bounds checked, " + std::to_string(violations) +
                               " violations"};
}

// Gap observed on the first run with seed 6 (0.2605), rounded down.
constexpr double kTimeConstantGapFloor = 0.26;

Outcome time_constant() {
  const auto report = lpp::estimate_time_constant(
      WeightDistribution::uniform(0, 1), {6, 10, 14, 18}, 200, 6, jobs());
  const auto& rows = report.time_constant;
  bool increasing = true;
  bool below = true;
  std::string means;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    below = below && rows[i].mean < 1.0 && rows[i].max < 1.0;
    if (i > 0) increasing = increasing && rows[i].mean > rows[i - 1].mean;
    means += (i ? ", " : "") + fmt("%.4f", rows[i].mean);
  }
  const double gap = rows.back().mean - rows.front().mean;
  return {increasing && below && gap >= 0.02 && gap >= kTimeConstantGapFloor,
          "means " + means + "; gap " + fmt("%.4f", gap) + " (floor " +
              fmt("%.2f", kTimeConstantGapFloor) + ")"};
}

Outcome deviation() {
  const auto report =
      lpp::estimate_deviation(WeightDistribution::two_point(1, 2, 0.05), 0.75,
                              {6, 8, 10, 12}, 1000000, 7, jobs());
  bool floor = true;
  std::string rows;
  for (const auto& r : report.deviation) {
    floor = floor && r.floor_respected;
    rows += (rows.empty() ? "" : ", ") + std::to_string(r.n) + ":" +
            fmt("%.5f", r.p_hat);
  }
  if (!report.rate_fit) return {false, "no rate fit"};
  const auto& fit = *report.rate_fit;
  const bool shape = fit.c < 0.0 && fit.quadratic_residual < fit.linear_residual;
  return {floor && shape,
          "p_hat " + rows + "; c=" + fmt("%.3e", fit.c) + ", residual quad " +
              fmt("%.4g", fit.quadratic_residual) + " vs lin " +
              fmt("%.4g", fit.linear_residual)};
}

Outcome sandwich() {
  const auto report = lpp::sandwich_experiment(WeightDistribution::exponential(1),
                                               2000, 20, 8, jobs());
  const auto& row = report.sandwich.front();
  const bool pass = row.freq_upper >= 0.8 && row.paths_valid && row.values_within_cap;
  return {pass, "freq(all X_e <= g) " + fmt("%.2f", row.freq_upper) +
                    " (union bound " + fmt("%.3f", row.union_bound_prediction) +
                    "), L/(n f) mean " + fmt("%.3f", row.ratio_mean) +
                    ", paths valid " + (row.paths_valid ? "yes" : "NO")};
}

Outcome closed_forms() {
  std::vector<std::string> failed;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  };
  auto near = [](double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
  };

  const auto tp = lpp::deviation_constants(WeightDistribution::two_point(1, 2, 0.5), 0.75, 0.01);
  expect(tp.p == 0.5, "p");
  expect(near(tp.small_c1, 1.4142135623730950, 1e-10), "c1");
  expect(near(tp.small_c2, 0.34657359027997265, 1e-10), "c2");
  expect(near(tp.big_c1, 1.0650089188842035, 1e-10), "C1(0.01)");
  const auto un = lpp::deviation_constants(WeightDistribution::uniform(0, 1), 0.5, 0.1);
  expect(near(un.x_prime, 0.375, 1e-10), "x'");
  expect(near(un.big_c2, 0.00075, 1e-10), "C2");
  expect(lpp::log_upper_bound(
             lpp::deviation_constants(WeightDistribution::two_point(1, 2, 0.5), 0.75,
                                      lpp::optimize_epsilon(WeightDistribution::two_point(1, 2, 0.5), 0.75, 100)),
             100) <=
             lpp::log_upper_bound(
                 lpp::deviation_constants(WeightDistribution::two_point(1, 2, 0.5), 0.75, 0.1), 100),
         "optimized eps");

  const auto uniform = WeightDistribution::uniform(0, 1);
  for (std::int64_t n : {3, 100, 10000}) {
    const double nd = static_cast<double>(n);
    const double r = lpp::xbar(uniform, n);
    expect(near(r, std::sqrt(2 * std::log(nd) / nd), 1e-10), "xbar closed form");
    expect(std::abs(r * lpp::tail(uniform, 1 - r / 2) - std::log(nd) / nd) <= 1e-12,
           "xbar residual");
    expect(r >= std::log(nd) / nd && r <= 1.0, "xbar range");
  }
  expect(near(lpp::xbar(uniform, 3), 0.85580850220443969, 1e-14) &&
             near(lpp::xbar(uniform, 100), 0.30348542587702927, 1e-14) &&
             near(lpp::xbar(uniform, 10000), 0.042919320525786945, 1e-14),
         "xbar frozen values");

  for (std::int64_t n : {10, 100, 1000}) {
    expect(lpp::variance_upper_bound(uniform, n) <= 3.0, "variance cap");
  }
  const auto light = WeightDistribution::two_point(1, 2, 0.05);
  expect(near(lpp::variance_upper_bound(light, 200), 8.000004, 1e-12) &&
             near(lpp::variance_upper_bound(light, 400), 8.000004, 1e-12),
         "two-point variance saturation");
  const double v2000 = lpp::variance_upper_bound(light, 2000);
  const double v4000 = lpp::variance_upper_bound(light, 4000);
  expect(near(v2000, 1.461991453765098, 1e-6) && near(v4000, 0.8486633997038346, 1e-6),
         "two-point variance frozen values");
  expect(v4000 < v2000, "two-point variance decrease");
  const double ratio =
      lpp::variance_upper_bound(uniform, 100) / lpp::variance_upper_bound(uniform, 1000);
  const double xratio = lpp::xbar(uniform, 100) / lpp::xbar(uniform, 1000);
  expect(ratio / xratio < 10 && xratio / ratio < 10, "uniform variance ratio");

  const auto exp1 = WeightDistribution::exponential(1);
  const auto par2 = WeightDistribution::pareto(2);
  expect(near(lpp::f_of_n(exp1, 100), 3.0779905601801903, 1e-10), "f exp");
  expect(near(lpp::f_of_n(par2, 10000), 32.950511449113040, 1e-10), "f pareto");
  for (std::int64_t n : {100, 10000, 1000000}) {
    const double nd = static_cast<double>(n);
    const double lnn = std::log(nd);
    expect(near(lpp::tail(exp1, lpp::f_of_n(exp1, n)), lnn / nd, 1e-10), "f plug-back");
    expect(near(lpp::g_of_n(exp1, n), 2 * lnn + std::log(lnn), 1e-10), "g exp");
    expect(near(nd * nd * lpp::tail(exp1, lpp::g_of_n(exp1, n)), 1 / lnn, 1e-10), "n^2 H(g) exp");
    expect(near(nd * nd * lpp::tail(par2, lpp::g_of_n(par2, n)), 1 / std::log(lnn), 1e-10),
           "n^2 H(g) pareto");
  }

  std::string detail = "constants, xbar, variance bound, f(n), g(n)";
  for (const auto& f : failed) detail += "; FAILED " + f;
  return {failed.empty(), detail};
}

Outcome determinism() {
  std::vector<lpp::CampaignConfig> configs(3);
  configs[0] = {lpp::CampaignKind::kTimeConstant, WeightDistribution::exponential(1),
                {5, 9, 13, 24}, 40, 101, 0.0, 1};
  configs[1] = {lpp::CampaignKind::kDeviation, WeightDistribution::two_point(1, 2, 0.05),
                {6, 8, 10}, 3000, 102, 0.75, 1};
  configs[2] = {lpp::CampaignKind::kSandwich, WeightDistribution::pareto(2.5),
                {200}, 12, 103, 0.0, 1};
  std::size_t identical = 0;
  for (auto config : configs) {
    config.jobs = 1;
    const auto a = lpp::run_campaign(config);
    config.jobs = 4;
    const auto b = lpp::run_campaign(config);
    config.jobs = 3;
    const auto c = lpp::run_campaign(config);
    if (lpp::to_json(a) == lpp::to_json(b) && lpp::to_json(a) == lpp::to_json(c) &&
        lpp::to_csv(a) == lpp::to_csv(b) && lpp::to_csv(a) == lpp::to_csv(c)) {
      ++identical;
    }
  }
  return {identical == configs.size(),
          std::to_string(identical) + "/3 campaign kinds byte-identical across jobs 1, 4, 3"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "five-vertex golden trace", 1.0, five_vertex},
      {2, "subset DP matches brute force", 60.0, oracle_equivalence},
      {3, "superadditivity at n=12", 60.0, superadditivity},
      {4, "k-subset property gives long excursions", 120.0, long_excursions},
      {5, "lower bounds never exceed W_n", 120.0, lower_bound_soundness},
      {6, "time constant means increase", 300.0, time_constant},
      {7, "deviation floor and quadratic rate", 900.0, deviation},
      {8, "sandwich at n=2000", 120.0, sandwich},
      {9, "closed-form bound calculators", 1.0, closed_forms},
      {10, "campaign output independent of jobs", 600.0, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = outcome.pass && in_time;
    failures += pass ? 0 : 1;
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  "
              << c.title << " - " << outcome.detail << " ["
              << fmt("%.2f s", seconds) << (in_time ? "" : ", over time limit")
              << "]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
