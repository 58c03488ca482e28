#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qcoex/config.hpp"

namespace qcoex {

inline constexpr const char* kSummaryHeader =
    "scenario_id,lambda,xi_r_snu_per_w,margin,offered_qkd_bps,offered_classical_bps,"
    "blocked_qkd_ratio,blocked_classical_ratio,unused_links,avg_link_utilization,runtime_ms";

inline constexpr const char* kDetailHeader =
    "scenario_id,link_id,length_km,n_slots_used,carried_qkd_bps,capacity_at_n_bps";

// One summary CSV line (no newline). Ratios carry 9 significant digits,
// bit/s fields are integers. Error rows leave the metric fields empty.
std::string format_summary_row(const ScenarioResult& r);
std::vector<std::string> format_detail_rows(const ScenarioResult& r);

// Writes summary.csv, manifest.json and (optionally) links.csv.
void emit_results(const std::vector<ScenarioResult>& results,
                  const std::filesystem::path& out_dir, bool detail,
                  const RunManifest& manifest);

// Reduced row as parsed back from summary.csv; runtime is kept separate so
// comparisons can exclude it.
struct SummaryRow {
  std::string scenario_id;
  double lambda = 0, xi_r = 0, margin = 0;
  double offered_qkd_bps = 0, offered_classical_bps = 0;
  double blocked_qkd_ratio = 0, blocked_classical_ratio = 0;
  int unused_links = 0;
  double avg_link_utilization = 0;
  double runtime_ms = 0;
};
std::vector<SummaryRow> read_summary_csv(const std::filesystem::path& file);

// ISO 8601 UTC timestamp of now.
std::string utc_timestamp();

}  // namespace qcoex
