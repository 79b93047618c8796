#pragma once

#include <string>

#include "lpp/campaign.hpp"

namespace lpp {

inline constexpr int kReportSchema = 1;

// Config echo as a compact JSON object. `jobs` is deliberately absent: it
// never changes results, and reports must be byte-identical across it.
std::string config_json(const CampaignConfig& config);

// Full report: {"schema": 1, "config": {...}, "ci_level": ..., "rows": [...],
// "rate_fit": {...}, "checks": [...]} with deterministic key order.
std::string to_json(const CampaignReport& report);

// One row per n. First line is "# schema=1 config=<config_json>", then a
// header whose columns depend on the campaign kind (see csv_columns).
std::string to_csv(const CampaignReport& report);
std::string csv_columns(CampaignKind kind);

}  // namespace lpp
