#include "lpp/campaign.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lpp/analysis.hpp"
#include "lpp/dfs.hpp"
#include "lpp/error.hpp"
#include "lpp/exact.hpp"
#include "lpp/graph.hpp"
#include "lpp/paths.hpp"
#include "parallel.hpp"

namespace lpp {
namespace {

constexpr double kZ95 = 1.959963984540054;
constexpr std::size_t kMinEvents = 10;

struct NoState {};

struct Moments {
  double mean;
  double variance;
  double min;
  double max;
};

Moments moments(const std::vector<double>& xs) {
  const double sum = std::accumulate(xs.begin(), xs.end(), 0.0);
  const double mean = sum / static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  return {mean, ss / static_cast<double>(xs.size() - 1), *lo, *hi};
}

void require_replicates(std::size_t replicates) {
  if (replicates < 2) throw PreconditionError("campaigns need >= 2 replicates");
}

// Weighted least squares of y on the first `degree + 1` powers of n.
// Returns coefficients and the weighted residual sum of squares.
std::pair<Eigen::VectorXd, double> weighted_polyfit(
    const std::vector<double>& ns, const std::vector<double>& ys,
    const std::vector<double>& weights, int degree) {
  const auto rows = static_cast<Eigen::Index>(ns.size());
  Eigen::MatrixXd design(rows, degree + 1);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double sw = std::sqrt(weights[static_cast<std::size_t>(i)]);
    double power = 1.0;
    for (int d = 0; d <= degree; ++d) {
      design(i, d) = sw * power;
      power *= ns[static_cast<std::size_t>(i)];
    }
    rhs(i) = sw * ys[static_cast<std::size_t>(i)];
  }
  Eigen::VectorXd coef = design.colPivHouseholderQr().solve(rhs);
  const double residual = (design * coef - rhs).squaredNorm();
  return {coef, residual};
}

}  // namespace

std::string to_string(CampaignKind kind) {
  switch (kind) {
    case CampaignKind::kTimeConstant:
      return "time-constant";
    case CampaignKind::kDeviation:
      return "deviation";
    case CampaignKind::kSandwich:
      return "sandwich";
  }
  return "unknown";
}

CampaignKind parse_campaign_kind(std::string_view name) {
  if (name == "time-constant") return CampaignKind::kTimeConstant;
  if (name == "deviation") return CampaignKind::kDeviation;
  if (name == "sandwich") return CampaignKind::kSandwich;
  throw ParseError("unknown campaign kind '" + std::string(name) + "'");
}

bool CampaignReport::all_checks_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.passed; });
}

const BoundCheck* CampaignReport::find_check(std::string_view name) const {
  for (const BoundCheck& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CampaignReport estimate_time_constant(const WeightDistribution& dist,
                                      const std::vector<int>& n_list,
                                      std::size_t replicates,
                                      std::uint64_t seed, unsigned jobs) {
  require_replicates(replicates);
  if (n_list.empty()) throw PreconditionError("empty n list");
  for (int n : n_list) {
    if (n < 2) throw PreconditionError("time-constant campaign needs n >= 2");
  }
  CampaignReport report;
  report.config = {CampaignKind::kTimeConstant, dist, n_list, replicates,
                   seed, 0.0, jobs};
  const ExtendedReal mu = essential_supremum(dist);
  bool replicates_below_mu = true;
  bool any_exact = false;

  for (int n : n_list) {
    const bool exact = n <= kExactMaxN;
    any_exact = any_exact || exact;
    std::vector<double> w_n(replicates);
    detail::parallel_for<SubsetDpSolver>(
        replicates, jobs, [&](SubsetDpSolver& solver, std::size_t r) {
          Rng rng = replicate_rng(seed, static_cast<std::uint64_t>(n), r);
          const EdgeWeights w = sample_weights(n, dist, rng);
          w_n[r] = exact ? solver.solve_value(w, 0, n)
                         : best_threshold_lower_bound(w, default_tau_grid(w)).value;
        });
    const double nd = n;
    std::vector<double> scaled(replicates);
    for (std::size_t r = 0; r < replicates; ++r) scaled[r] = w_n[r] / nd;
    const Moments m = moments(scaled);
    const Moments raw = moments(w_n);
    if (exact && mu.is_finite() && !(m.max < mu.value())) {
      replicates_below_mu = false;
    }
    report.time_constant.push_back(
        {n, exact ? "exact" : "lower-bound", replicates, m.mean, m.variance,
         kZ95 * std::sqrt(m.variance / static_cast<double>(replicates)), m.min,
         m.max, raw.variance});
  }

  bool increasing = true;
  for (std::size_t i = 1; i < report.time_constant.size(); ++i) {
    const auto& prev = report.time_constant[i - 1];
    const auto& cur = report.time_constant[i];
    if (cur.n > prev.n && !(cur.mean > prev.mean)) increasing = false;
  }
  report.checks.push_back({"means_strictly_increasing",
                           "mean(W_n/n) strictly increasing along the n list",
                           increasing});
  if (mu.is_finite()) {
    bool means_below = std::all_of(
        report.time_constant.begin(), report.time_constant.end(),
        [&](const TimeConstantRow& row) { return row.mean < mu.value(); });
    report.checks.push_back(
        {"means_below_mu", "mean(W_n/n) < mu = ess sup X_e", means_below});
    if (any_exact) {
      report.checks.push_back({"replicates_below_mu",
                               "W_n/n < mu for every exact replicate "
                               "(at most n-1 edges, each <= mu)",
                               replicates_below_mu});
    }
  }
  return report;
}

CampaignReport estimate_deviation(const WeightDistribution& dist, double x,
                                  const std::vector<int>& n_list,
                                  std::size_t replicates, std::uint64_t seed,
                                  unsigned jobs) {
  require_replicates(replicates);
  if (n_list.empty()) throw PreconditionError("empty n list");
  const ExtendedReal mu_ext = essential_supremum(dist);
  if (!mu_ext.is_finite()) {
    throw PreconditionError("deviation campaign needs mu < infinity");
  }
  const double mu = mu_ext.value();
  if (!(x > 0.0 && x < mu)) {
    throw PreconditionError("deviation campaign needs 0 < x < mu");
  }
  const double p = tail(dist, mu - x);
  if (!(p < 1.0)) {
    throw PreconditionError("deviation campaign needs p = H(mu - x) < 1");
  }
  for (int n : n_list) {
    if (n < 2 || n > kExactMaxN) {
      throw PreconditionError("deviation campaign needs 2 <= n <= " +
                              std::to_string(kExactMaxN));
    }
  }

  CampaignReport report;
  report.config = {CampaignKind::kDeviation, dist, n_list, replicates, seed,
                   x, jobs};
  bool floor_ok = true;
  bool upper_ok = true;
  const double R = static_cast<double>(replicates);
  const double z2 = kZ95 * kZ95;

  for (int n : n_list) {
    const double threshold = (mu - x) * n;
    std::vector<std::uint8_t> hit(replicates, 0);
    detail::parallel_for<SubsetDpSolver>(
        replicates, jobs, [&](SubsetDpSolver& solver, std::size_t r) {
          Rng rng = replicate_rng(seed, static_cast<std::uint64_t>(n), r);
          const EdgeWeights w = sample_weights(n, dist, rng);
          hit[r] = solver.solve_value(w, 0, n) <= threshold ? 1 : 0;
        });
    const auto events = static_cast<std::size_t>(
        std::count(hit.begin(), hit.end(), std::uint8_t{1}));

    DeviationRow row{};
    row.n = n;
    row.replicates = replicates;
    row.events = events;
    row.p_hat = static_cast<double>(events) / R;
    row.std_error = std::sqrt(row.p_hat * (1.0 - row.p_hat) / R);
    row.ln_p_hat = std::log(row.p_hat);
    const double center = (row.p_hat + z2 / (2.0 * R)) / (1.0 + z2 / R);
    const double half =
        kZ95 / (1.0 + z2 / R) *
        std::sqrt(row.p_hat * (1.0 - row.p_hat) / R + z2 / (4.0 * R * R));
    // Rounding can push a limit past p_hat when p_hat is 0 or 1.
    row.ln_ci_low = std::log(std::clamp(center - half, 0.0, row.p_hat));
    row.ln_ci_high = std::log(std::clamp(center + half, row.p_hat, 1.0));
    const double pairs = 0.5 * n * (n - 1.0);
    row.analytic_floor = std::pow(1.0 - p, pairs);
    const double eps = optimize_epsilon(dist, x, n);
    row.log_upper_bound = log_upper_bound(deviation_constants(dist, x, eps), n);
    row.insufficient = events < kMinEvents;
    row.floor_respected = row.p_hat + 4.0 * row.std_error >= row.analytic_floor;
    floor_ok = floor_ok && row.floor_respected;
    const double upper = std::min(1.0, std::exp(row.log_upper_bound));
    upper_ok = upper_ok && row.p_hat - 4.0 * row.std_error <= upper;
    report.deviation.push_back(row);
  }

  report.checks.push_back(
      {"analytic_floor",
       "p_hat + 4 SE >= (1-p)^(n(n-1)/2), p = H(mu - x), at every n",
       floor_ok});
  report.checks.push_back(
      {"upper_bound",
       "p_hat - 4 SE <= min(1, C1^n exp(-C2 n^2)) at the optimized epsilon",
       upper_ok});

  std::vector<double> ns;
  std::vector<double> ys;
  std::vector<double> ws;
  for (const DeviationRow& row : report.deviation) {
    if (row.insufficient) continue;
    ns.push_back(row.n);
    ys.push_back(row.ln_p_hat);
    ws.push_back(static_cast<double>(row.events));
  }
  report.checks.push_back({"sufficient_events",
                           "at least 10 events at every n",
                           ns.size() == report.deviation.size()});
  if (ns.size() >= 3) {
    const auto [quad, quad_res] = weighted_polyfit(ns, ys, ws, 2);
    const auto [lin, lin_res] = weighted_polyfit(ns, ys, ws, 1);
    report.rate_fit = RateFit{ns.size(), quad(0), quad(1), quad(2), quad_res,
                              lin(0), lin(1), lin_res};
    report.checks.push_back({"rate_quadratic_negative",
                             "ln p_hat ~ a + b n + c n^2 (WLS, weights = "
                             "event counts) has c < 0",
                             quad(2) < 0.0});
    report.checks.push_back(
        {"quadratic_beats_linear",
         "weighted residual of the quadratic fit < that of a + b n",
         quad_res < lin_res});
  } else {
    report.checks.push_back({"rate_fit_points",
                             "at least 3 sufficient n values for the rate fit",
                             false});
  }
  return report;
}

CampaignReport sandwich_experiment(const WeightDistribution& dist, int n,
                                   std::size_t replicates, std::uint64_t seed,
                                   unsigned jobs) {
  require_replicates(replicates);
  if (dist.bounded()) {
    throw PreconditionError("sandwich experiment needs mu = infinity");
  }
  if (n < 16) throw PreconditionError("sandwich experiment needs n >= 16");
  const double f = f_of_n(dist, n);
  const double g = g_of_n(dist, n);

  struct Record {
    bool upper = false;
    double ratio = 0.0;
    bool path_valid = false;
    bool within_cap = false;
  };
  std::vector<Record> records(replicates);
  detail::parallel_for<NoState>(replicates, jobs, [&](NoState&, std::size_t r) {
    Rng rng = replicate_rng(seed, static_cast<std::uint64_t>(n), r);
    const EdgeWeights w = sample_weights(n, dist, rng);
    const double max_w = w.max_weight();
    std::vector<double> grid = default_tau_grid(w);
    grid.push_back(f);
    const LowerBound lb = best_threshold_lower_bound(w, grid);
    const auto& vs = lb.path.vertices();
    Record rec;
    rec.upper = max_w <= g;
    rec.ratio = lb.value / (n * f);
    rec.path_valid = lb.path.front() == 1 && lb.path.back() == n &&
                     std::all_of(vs.begin(), vs.end(),
                                 [n](Vertex v) { return v >= 1 && v <= n; });
    rec.within_cap = lb.value > 0.0 && lb.value <= (n - 1) * max_w;
    records[r] = rec;
  });

  SandwichRow row{};
  row.n = n;
  row.replicates = replicates;
  row.f_n = f;
  row.g_n = g;
  const double nd = n;
  row.union_bound_prediction = 1.0 - nd * nd * tail(dist, g);
  std::size_t upper_count = 0;
  row.paths_valid = true;
  row.values_within_cap = true;
  for (const Record& rec : records) {
    upper_count += rec.upper ? 1 : 0;
    row.ratios.push_back(rec.ratio);
    row.paths_valid = row.paths_valid && rec.path_valid;
    row.values_within_cap = row.values_within_cap && rec.within_cap;
  }
  const double R = static_cast<double>(replicates);
  row.freq_upper = static_cast<double>(upper_count) / R;
  row.freq_upper_std_error = std::sqrt(row.freq_upper * (1.0 - row.freq_upper) / R);
  const Moments m = moments(row.ratios);
  row.ratio_mean = m.mean;
  row.ratio_min = m.min;
  row.ratio_max = m.max;

  CampaignReport report;
  report.config = {CampaignKind::kSandwich, dist, {n}, replicates, seed, 0.0,
                   jobs};
  report.checks.push_back(
      {"union_bound",
       "freq(all X_e <= g(n)) >= 1 - n^2 H(g(n)) - 4 SE",
       row.freq_upper + 4.0 * row.freq_upper_std_error >=
           row.union_bound_prediction});
  report.checks.push_back(
      {"paths_valid", "every lower-bound path is self-avoiding from 1 to n",
       row.paths_valid});
  report.checks.push_back({"values_within_cap",
                           "0 < L <= (n-1) max X_e on every replicate",
                           row.values_within_cap});
  report.sandwich.push_back(std::move(row));
  return report;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  switch (config.kind) {
    case CampaignKind::kTimeConstant:
      return estimate_time_constant(config.dist, config.n_list,
                                    config.replicates, config.seed,
                                    config.jobs);
    case CampaignKind::kDeviation:
      return estimate_deviation(config.dist, config.x, config.n_list,
                                config.replicates, config.seed, config.jobs);
    case CampaignKind::kSandwich:
      if (config.n_list.size() != 1) {
        throw PreconditionError("sandwich experiment takes exactly one n");
      }
      return sandwich_experiment(config.dist, config.n_list.front(),
                                 config.replicates, config.seed, config.jobs);
  }
  throw std::logic_error("unhandled campaign kind");
}

AksProbe probe_aks(double theta, int n, std::uint64_t seed) {
  if (!(theta > 0.0)) throw PreconditionError("probe_aks needs theta > 0");
  if (n < 3) throw PreconditionError("probe_aks needs n >= 3");
  AksProbe probe{n, theta, std::nullopt, std::nullopt};
  try {
    probe.reference_length = aks_reference_length(theta, n);
  } catch (const PreconditionError&) {
    probe.reference_length.reset();
  }
  if (n > kAksProbeMaxDfsN) return probe;
  Rng rng = replicate_rng(seed, static_cast<std::uint64_t>(n), 0);
  const SimpleGraph g = sample_gnp(n, std::min(1.0, theta / n), rng);
  probe.dfs_length = longest_dfs_excursion(g).length();
  return probe;
}

}  // namespace lpp
