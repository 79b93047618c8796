#include "lpp/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace lpp {
namespace {

using Json = nlohmann::ordered_json;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* flag(bool b) { return b ? "true" : "false"; }

Json config_object(const CampaignConfig& config) {
  Json j;
  j["kind"] = to_string(config.kind);
  j["dist"] = config.dist.to_string();
  j["n_list"] = config.n_list;
  j["replicates"] = config.replicates;
  j["seed"] = config.seed;
  if (config.kind == CampaignKind::kDeviation) j["x"] = config.x;
  return j;
}

}  // namespace

std::string config_json(const CampaignConfig& config) {
  return config_object(config).dump();
}

std::string to_json(const CampaignReport& report) {
  Json j;
  j["schema"] = kReportSchema;
  j["config"] = config_object(report.config);
  j["ci_level"] = report.ci_level;
  Json rows = Json::array();
  for (const auto& r : report.time_constant) {
    rows.push_back({{"n", r.n},
                    {"mode", r.mode},
                    {"replicates", r.replicates},
                    {"mean", r.mean},
                    {"variance", r.variance},
                    {"ci_half_width", r.ci_half_width},
                    {"min", r.min},
                    {"max", r.max},
                    {"variance_wn", r.variance_wn}});
  }
  for (const auto& r : report.deviation) {
    rows.push_back({{"n", r.n},
                    {"replicates", r.replicates},
                    {"events", r.events},
                    {"p_hat", r.p_hat},
                    {"std_error", r.std_error},
                    {"ln_p_hat", r.ln_p_hat},
                    {"ln_ci_low", r.ln_ci_low},
                    {"ln_ci_high", r.ln_ci_high},
                    {"analytic_floor", r.analytic_floor},
                    {"log_upper_bound", r.log_upper_bound},
                    {"insufficient", r.insufficient},
                    {"floor_respected", r.floor_respected}});
  }
  for (const auto& r : report.sandwich) {
    rows.push_back({{"n", r.n},
                    {"replicates", r.replicates},
                    {"f_n", r.f_n},
                    {"g_n", r.g_n},
                    {"freq_upper", r.freq_upper},
                    {"freq_upper_std_error", r.freq_upper_std_error},
                    {"union_bound_prediction", r.union_bound_prediction},
                    {"ratio_mean", r.ratio_mean},
                    {"ratio_min", r.ratio_min},
                    {"ratio_max", r.ratio_max},
                    {"ratios", r.ratios},
                    {"paths_valid", r.paths_valid},
                    {"values_within_cap", r.values_within_cap}});
  }
  j["rows"] = rows;
  if (report.rate_fit) {
    const RateFit& f = *report.rate_fit;
    j["rate_fit"] = {{"model", "ln p_hat = a + b n + c n^2"},
                     {"weights", "event counts"},
                     {"points", f.points},
                     {"a", f.a},
                     {"b", f.b},
                     {"c", f.c},
                     {"quadratic_residual", f.quadratic_residual},
                     {"linear_a", f.linear_a},
                     {"linear_b", f.linear_b},
                     {"linear_residual", f.linear_residual}};
  }
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(
        {{"name", c.name}, {"formula", c.formula}, {"passed", c.passed}});
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

std::string csv_columns(CampaignKind kind) {
  switch (kind) {
    case CampaignKind::kTimeConstant:
      return "n,mode,replicates,mean,variance,ci_half_width,min,max,"
             "variance_wn";
    case CampaignKind::kDeviation:
      return "n,replicates,events,p_hat,std_error,ln_p_hat,ln_ci_low,"
             "ln_ci_high,analytic_floor,log_upper_bound,insufficient,"
             "floor_respected";
    case CampaignKind::kSandwich:
      return "n,replicates,f_n,g_n,freq_upper,freq_upper_std_error,"
             "union_bound_prediction,ratio_mean,ratio_min,ratio_max,"
             "paths_valid,values_within_cap";
  }
  return {};
}

std::string to_csv(const CampaignReport& report) {
  std::ostringstream out;
  out << "# schema=" << kReportSchema
      << " config=" << config_json(report.config) << '\n';
  out << csv_columns(report.config.kind) << '\n';
  for (const auto& r : report.time_constant) {
    out << r.n << ',' << r.mode << ',' << r.replicates << ',' << num(r.mean)
        << ',' << num(r.variance) << ',' << num(r.ci_half_width) << ','
        << num(r.min) << ',' << num(r.max) << ',' << num(r.variance_wn)
        << '\n';
  }
  for (const auto& r : report.deviation) {
    out << r.n << ',' << r.replicates << ',' << r.events << ','
        << num(r.p_hat) << ',' << num(r.std_error) << ',' << num(r.ln_p_hat)
        << ',' << num(r.ln_ci_low) << ',' << num(r.ln_ci_high) << ','
        << num(r.analytic_floor) << ',' << num(r.log_upper_bound) << ','
        << flag(r.insufficient) << ',' << flag(r.floor_respected) << '\n';
  }
  for (const auto& r : report.sandwich) {
    out << r.n << ',' << r.replicates << ',' << num(r.f_n) << ','
        << num(r.g_n) << ',' << num(r.freq_upper) << ','
        << num(r.freq_upper_std_error) << ','
        << num(r.union_bound_prediction) << ',' << num(r.ratio_mean) << ','
        << num(r.ratio_min) << ',' << num(r.ratio_max) << ','
        << flag(r.paths_valid) << ',' << flag(r.values_within_cap) << '\n';
  }
  return out.str();
}

}  // namespace lpp
