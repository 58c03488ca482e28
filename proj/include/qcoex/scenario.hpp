#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcoex/rwa.hpp"

namespace qcoex {

// Topology recipe: the built-in fixture by name, or an explicit node/link
// list (bidirectional entries, expanded to directed pairs).
struct TopologySpec {
  std::string name = "spain7";  // "spain7" or "custom"
  struct BiLink {
    int a = 0;
    int b = 0;
    double length_km = 0.0;
    int wdm_slots = 40;
  };
  std::vector<Node> nodes;      // custom only
  std::vector<BiLink> bilinks;  // custom only
};

Topology build_topology(const TopologySpec& spec, double lambda);

// Traffic recipe: gravity weights (empty map = spain7 population defaults)
// or an explicit demand list used as proportions.
struct MatrixSpec {
  enum class Kind { gravity, explicit_demands };
  Kind kind = Kind::gravity;
  std::map<int, double> weights;
  std::vector<Demand> demands;
};

TrafficMatrix build_matrix(const MatrixSpec& spec, const Topology& topology, double total_bps);

struct ScenarioConfig {
  std::string scenario_id = "scenario";
  TopologySpec topology;
  double lambda = 0.01;
  MatrixSpec classical_matrix;
  double offered_classical_bps = 10e12;
  MatrixSpec qkd_matrix;
  double offered_qkd_bps = 0.0;
  QkdParams qkd;
  double margin = 0.0;
  int k = 5;

  void validate() const;  // throws std::invalid_argument naming the field
};

struct LinkReport {
  int link_id = 0;
  double length_km = 0.0;
  int n_slots_used = 0;
  double carried_qkd_bps = 0.0;
  double capacity_at_n_bps = 0.0;  // key capacity given the final slot count
};

struct ScenarioResult {
  std::string scenario_id;
  // echoed inputs, in summary-CSV column order
  double lambda = 0.0;
  double xi_r = 0.0;
  double margin = 0.0;
  double offered_qkd_bps = 0.0;
  double offered_classical_bps = 0.0;
  // metrics
  double blocked_qkd_ratio = 0.0;
  double blocked_classical_ratio = 0.0;
  int unused_links = 0;            // links carrying zero classical lightpaths
  double avg_link_utilization = 0.0;
  std::vector<LinkReport> links;
  double runtime_ms = 0.0;         // informational only
  std::string error;               // non-empty = failed sweep row
};

// blocked/offered, with 0 for an empty offer. carried is capped at offered.
double blocking_ratio(double offered_bps, double carried_bps);

// End-to-end deterministic run: build topology, scale matrices, allocate
// CV-QKD first, then classical RWA, then compute the metrics.
ScenarioResult run_scenario(const ScenarioConfig& config);

// Same, keeping the intermediate plans (used by tests and the detail CSV).
struct ScenarioRun {
  ScenarioResult result;
  Topology topology;
  TrafficMatrix classical_demands;
  TrafficMatrix qkd_demands;
  QkdPlan qkd_plan;
  RwaPlan rwa_plan;
};
ScenarioRun run_scenario_full(const ScenarioConfig& config);

// Axis values for a sweep; an empty axis pins the base config's value.
struct SweepAxes {
  std::vector<double> lambda;
  std::vector<double> xi_r;
  std::vector<double> offered_qkd_bps;
  std::vector<double> offered_classical_bps;
  std::vector<double> margin;

  size_t grid_size() const;
};

// Cartesian product in fixed nesting order (lambda, xi_r, offered QKD,
// offered classical, margin), emitted in grid order regardless of the number
// of worker threads. A failing scenario becomes an error row.
std::vector<ScenarioResult> sweep(const ScenarioConfig& base, const SweepAxes& axes,
                                  int threads = 1);

// Expands one grid index into a concrete scenario config.
ScenarioConfig sweep_point(const ScenarioConfig& base, const SweepAxes& axes, size_t index);

// Per-link n = 0 key capacities; backs the `capacity` CLI subcommand.
struct LinkCapacityRow {
  int link_id = 0;
  std::string src_name, dst_name;
  double length_km = 0.0;
  double capacity_bps = 0.0;
};
std::vector<LinkCapacityRow> capacity_report(const Topology& topology, const QkdParams& params);

}  // namespace qcoex
