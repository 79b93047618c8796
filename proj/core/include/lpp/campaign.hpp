#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpp/weights.hpp"

namespace lpp {

enum class CampaignKind { kTimeConstant, kDeviation, kSandwich };

std::string to_string(CampaignKind kind);
// "time-constant", "deviation", "sandwich"; throws ParseError otherwise.
CampaignKind parse_campaign_kind(std::string_view name);

struct CampaignConfig {
  CampaignKind kind = CampaignKind::kTimeConstant;
  WeightDistribution dist = WeightDistribution::uniform(0.0, 1.0);
  std::vector<int> n_list;
  std::size_t replicates = 0;
  std::uint64_t seed = 0;
  double x = 0.0;     // deviation campaigns only
  unsigned jobs = 1;  // worker threads; never changes the report
};

// A pass/fail comparison together with the formula it checked.
struct BoundCheck {
  std::string name;
  std::string formula;
  bool passed;
};

// Statistics of W_n / n over replicates.
struct TimeConstantRow {
  int n;
  std::string mode;  // "exact" (subset DP) or "lower-bound" (DFS pipeline)
  std::size_t replicates;
  double mean;
  double variance;         // sample variance of W_n / n
  double ci_half_width;    // normal approximation at ci_level
  double min;
  double max;
  double variance_wn;      // sample variance of W_n itself
};

struct DeviationRow {
  int n;
  std::size_t replicates;
  std::size_t events;        // replicates with W_n <= (mu - x) n
  double p_hat;
  double std_error;          // sqrt(p_hat (1 - p_hat) / replicates)
  double ln_p_hat;
  double ln_ci_low;          // log of the Wilson interval
  double ln_ci_high;
  double analytic_floor;     // (1 - p)^(n(n-1)/2)
  double log_upper_bound;    // n ln C1 - C2 n^2 at the optimized epsilon
  bool insufficient;         // fewer than 10 events
  bool floor_respected;      // p_hat + 4 SE >= analytic_floor
};

// Weighted least squares of ln p_hat on (1, n, n^2), weights = event counts.
struct RateFit {
  std::size_t points;
  double a;
  double b;
  double c;
  double quadratic_residual;
  double linear_a;
  double linear_b;
  double linear_residual;
};

struct SandwichRow {
  int n;
  std::size_t replicates;
  double f_n;
  double g_n;
  double freq_upper;              // fraction with every weight <= g(n)
  double freq_upper_std_error;
  double union_bound_prediction;  // 1 - n^2 H(g(n))
  std::vector<double> ratios;     // L / (n f(n)) per replicate
  double ratio_mean;
  double ratio_min;
  double ratio_max;
  bool paths_valid;               // every L path self-avoiding 1 -> n
  bool values_within_cap;         // 0 < L <= (n - 1) max weight
};

struct CampaignReport {
  CampaignConfig config;
  double ci_level = 0.95;
  std::vector<TimeConstantRow> time_constant;
  std::vector<DeviationRow> deviation;
  std::optional<RateFit> rate_fit;
  std::vector<SandwichRow> sandwich;
  std::vector<BoundCheck> checks;

  bool all_checks_passed() const;
  const BoundCheck* find_check(std::string_view name) const;
};

// Mean and CI of W_n / n per n. Exact subset DP for n <= 22, the best
// threshold lower bound above (recorded as mode "lower-bound").
CampaignReport estimate_time_constant(const WeightDistribution& dist,
                                      const std::vector<int>& n_list,
                                      std::size_t replicates,
                                      std::uint64_t seed, unsigned jobs = 1);

// Frequency of W_n <= (mu - x) n with the exact solver and a quadratic rate
// fit of its logarithm. Bounded laws, every n <= 22.
CampaignReport estimate_deviation(const WeightDistribution& dist, double x,
                                  const std::vector<int>& n_list,
                                  std::size_t replicates, std::uint64_t seed,
                                  unsigned jobs = 1);

// Upper event "all weights <= g(n)" and pipeline lower bound L against
// n f(n). Unbounded laws, n >= 16.
CampaignReport sandwich_experiment(const WeightDistribution& dist, int n,
                                   std::size_t replicates, std::uint64_t seed,
                                   unsigned jobs = 1);

CampaignReport run_campaign(const CampaignConfig& config);

inline constexpr int kAksProbeMaxDfsN = 20000;

// Longest DFS stack in one G(n, theta / n) draw, next to the AKS reference
// length when theta is inside its range. The graph is dense-stored, so the
// DFS part is skipped above kAksProbeMaxDfsN.
struct AksProbe {
  int n;
  double theta;
  std::optional<double> reference_length;
  std::optional<std::size_t> dfs_length;
};
AksProbe probe_aks(double theta, int n, std::uint64_t seed);

}  // namespace lpp
