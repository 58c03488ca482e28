#include "qcoex/results_io.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qcoex {

namespace {

std::string num9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string bps(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.0f", v);
  return buf;
}

}  // namespace

std::string format_summary_row(const ScenarioResult& r) {
  std::ostringstream out;
  out << r.scenario_id << ',' << num9(r.lambda) << ',' << num9(r.xi_r) << ','
      << num9(r.margin) << ',' << bps(r.offered_qkd_bps) << ','
      << bps(r.offered_classical_bps) << ',';
  if (r.error.empty()) {
    out << num9(r.blocked_qkd_ratio) << ',' << num9(r.blocked_classical_ratio) << ','
        << r.unused_links << ',' << num9(r.avg_link_utilization) << ',';
    char rt[32];
    std::snprintf(rt, sizeof rt, "%.3f", r.runtime_ms);
    out << rt;
  } else {
    out << ",,,,";  // metrics unavailable; the manifest records the error
  }
  return out.str();
}

std::vector<std::string> format_detail_rows(const ScenarioResult& r) {
  std::vector<std::string> rows;
  rows.reserve(r.links.size());
  for (const LinkReport& l : r.links) {
    std::ostringstream out;
    out << r.scenario_id << ',' << l.link_id << ',' << num9(l.length_km) << ','
        << l.n_slots_used << ',' << bps(l.carried_qkd_bps) << ','
        << bps(l.capacity_at_n_bps);
    rows.push_back(out.str());
  }
  return rows;
}

void emit_results(const std::vector<ScenarioResult>& results,
                  const std::filesystem::path& out_dir, bool detail,
                  const RunManifest& manifest) {
  if (results.empty()) throw std::runtime_error("emit_results: empty result list");
  std::filesystem::create_directories(out_dir);

  {
    std::ofstream csv(out_dir / "summary.csv");
    if (!csv) throw std::runtime_error("emit_results: cannot write " +
                                       (out_dir / "summary.csv").string());
    csv << kSummaryHeader << '\n';
    for (const ScenarioResult& r : results) csv << format_summary_row(r) << '\n';
  }

  if (detail) {
    std::ofstream csv(out_dir / "links.csv");
    if (!csv) throw std::runtime_error("emit_results: cannot write " +
                                       (out_dir / "links.csv").string());
    csv << kDetailHeader << '\n';
    for (const ScenarioResult& r : results)
      for (const std::string& row : format_detail_rows(r)) csv << row << '\n';
  }

  nlohmann::json m;
  m["tool_version"] = manifest.tool_version;
  m["config_digest"] = manifest.config_digest;
  m["started_at"] = manifest.started_at_utc;
  m["row_count"] = manifest.row_count;
  nlohmann::json errors = nlohmann::json::array();
  for (const ScenarioResult& r : results)
    if (!r.error.empty()) errors.push_back({{"scenario_id", r.scenario_id}, {"error", r.error}});
  if (!errors.empty()) m["errors"] = errors;
  std::ofstream mf(out_dir / "manifest.json");
  if (!mf) throw std::runtime_error("emit_results: cannot write " +
                                    (out_dir / "manifest.json").string());
  mf << m.dump(2) << '\n';
}

std::vector<SummaryRow> read_summary_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("read_summary_csv: cannot read " + file.string());
  std::string line;
  if (!std::getline(in, line) || line != kSummaryHeader)
    throw std::runtime_error("read_summary_csv: unexpected header");
  std::vector<SummaryRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() < 11) fields.resize(11);
    SummaryRow r;
    r.scenario_id = fields[0];
    r.lambda = std::stod(fields[1]);
    r.xi_r = std::stod(fields[2]);
    r.margin = std::stod(fields[3]);
    r.offered_qkd_bps = std::stod(fields[4]);
    r.offered_classical_bps = std::stod(fields[5]);
    if (!fields[6].empty()) {
      r.blocked_qkd_ratio = std::stod(fields[6]);
      r.blocked_classical_ratio = std::stod(fields[7]);
      r.unused_links = std::stoi(fields[8]);
      r.avg_link_utilization = std::stod(fields[9]);
      r.runtime_ms = std::stod(fields[10]);
    }
    rows.push_back(r);
  }
  return rows;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace qcoex
