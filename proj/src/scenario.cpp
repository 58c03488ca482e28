#include "qcoex/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <stdexcept>

namespace qcoex {

Topology build_topology(const TopologySpec& spec, double lambda) {
  if (spec.name == "spain7") return build_spanish_topology(lambda);
  if (spec.name != "custom")
    throw std::invalid_argument("topology: unknown name \"" + spec.name + "\"");
  std::vector<Link> links;
  links.reserve(spec.bilinks.size() * 2);
  for (const auto& b : spec.bilinks) {
    links.push_back({0, b.a, b.b, b.length_km, 0.0, b.wdm_slots});
    links.push_back({0, b.b, b.a, b.length_km, 0.0, b.wdm_slots});
  }
  return make_topology(spec.nodes, std::move(links), lambda);
}

TrafficMatrix build_matrix(const MatrixSpec& spec, const Topology& topology, double total_bps) {
  if (!(total_bps >= 0)) throw std::invalid_argument("total_bps: must be >= 0");
  TrafficMatrix base;
  if (spec.kind == MatrixSpec::Kind::explicit_demands) {
    base = make_traffic_matrix(spec.demands);
    for (const Demand& d : base.demands)
      if (topology.node_index(d.origin) < 0 || topology.node_index(d.destination) < 0)
        throw std::invalid_argument("demand " + std::to_string(d.id) +
                                    ": references an unknown node");
  } else {
    std::map<int, double> weights = spec.weights;
    if (weights.empty()) {
      if (topology.nodes.size() == 7 && topology.node_index(7) >= 0) {
        weights = spain7_population_weights();
      } else {
        for (const Node& n : topology.nodes) weights[n.id] = 1.0;
      }
    }
    for (const auto& [id, w] : weights)
      if (topology.node_index(id) < 0)
        throw std::invalid_argument("weights: unknown node id " + std::to_string(id));
    base = gravity_matrix(weights, total_bps > 0 ? total_bps : 1.0);
  }
  return scale_traffic_matrix(base, total_bps);
}

void ScenarioConfig::validate() const {
  if (!(lambda > 0)) throw std::invalid_argument("lambda: must be > 0");
  if (!(offered_classical_bps >= 0))
    throw std::invalid_argument("classical.total_bps: must be >= 0");
  if (!(offered_qkd_bps >= 0)) throw std::invalid_argument("qkd.total_bps: must be >= 0");
  if (!(margin >= 0) || margin >= 1) throw std::invalid_argument("margin: must be in [0, 1)");
  if (k < 1) throw std::invalid_argument("k: must be >= 1");
  qkd.validate();
}

double blocking_ratio(double offered_bps, double carried_bps) {
  if (offered_bps <= 0) return 0.0;
  if (carried_bps > offered_bps) carried_bps = offered_bps;
  if (carried_bps < 0) carried_bps = 0;
  return (offered_bps - carried_bps) / offered_bps;
}

ScenarioRun run_scenario_full(const ScenarioConfig& config) {
  config.validate();
  const auto t0 = std::chrono::steady_clock::now();

  ScenarioRun run;
  run.topology = build_topology(config.topology, config.lambda);
  run.classical_demands =
      build_matrix(config.classical_matrix, run.topology, config.offered_classical_bps);
  run.qkd_demands = build_matrix(config.qkd_matrix, run.topology, config.offered_qkd_bps);

  LinkCapacityCache capacities(run.topology, config.qkd);
  run.qkd_plan =
      plan_qkd(run.topology, run.qkd_demands, config.qkd, config.margin, config.k, capacities);
  run.rwa_plan = plan_classical(run.topology, run.classical_demands, run.qkd_plan, config.qkd,
                                config.k, capacities);

  ScenarioResult& res = run.result;
  res.scenario_id = config.scenario_id;
  res.lambda = config.lambda;
  res.xi_r = config.qkd.xi_r;
  res.margin = config.margin;
  res.offered_qkd_bps = config.offered_qkd_bps;
  res.offered_classical_bps = config.offered_classical_bps;

  const long double qkd_offered = run.qkd_demands.total_offered_bps;
  const long double qkd_carried = qkd_offered - run.qkd_plan.total_blocked_bps;
  res.blocked_qkd_ratio =
      blocking_ratio(static_cast<double>(qkd_offered), static_cast<double>(qkd_carried));
  res.blocked_classical_ratio =
      blocking_ratio(run.classical_demands.total_offered_bps,
                     run.classical_demands.total_offered_bps - run.rwa_plan.total_blocked_bps);

  double utilization_sum = 0.0;
  for (const Link& l : run.topology.links) {
    const int used = run.rwa_plan.occupancy.active_count[l.id];
    if (used == 0) res.unused_links += 1;
    if (l.wdm_slots > 0) utilization_sum += static_cast<double>(used) / l.wdm_slots;
    LinkReport lr;
    lr.link_id = l.id;
    lr.length_km = l.scaled_length_km;
    lr.n_slots_used = used;
    lr.carried_qkd_bps = static_cast<double>(run.qkd_plan.link_states[l.id].carried_bps);
    lr.capacity_at_n_bps = static_cast<double>(capacities.at(l.id, used));
    res.links.push_back(lr);
  }
  res.avg_link_utilization =
      run.topology.links.empty() ? 0.0 : utilization_sum / run.topology.links.size();

  res.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return run;
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
  return run_scenario_full(config).result;
}

size_t SweepAxes::grid_size() const {
  auto dim = [](const std::vector<double>& v) { return v.empty() ? size_t{1} : v.size(); };
  return dim(lambda) * dim(xi_r) * dim(offered_qkd_bps) * dim(offered_classical_bps) *
         dim(margin);
}

ScenarioConfig sweep_point(const ScenarioConfig& base, const SweepAxes& axes, size_t index) {
  auto pick = [&index](const std::vector<double>& axis, double base_value) {
    if (axis.empty()) return base_value;
    const double v = axis[index % axis.size()];
    index /= axis.size();
    return v;
  };
  // Innermost axis first: margin varies fastest.
  ScenarioConfig c = base;
  c.margin = pick(axes.margin, base.margin);
  c.offered_classical_bps = pick(axes.offered_classical_bps, base.offered_classical_bps);
  c.offered_qkd_bps = pick(axes.offered_qkd_bps, base.offered_qkd_bps);
  c.qkd.xi_r = pick(axes.xi_r, base.qkd.xi_r);
  c.lambda = pick(axes.lambda, base.lambda);
  return c;
}

std::vector<ScenarioResult> sweep(const ScenarioConfig& base, const SweepAxes& axes,
                                  int threads) {
  const size_t total = axes.grid_size();
  if (total == 0) throw std::invalid_argument("sweep: empty grid");
  std::vector<ScenarioResult> results(total);

  auto worker = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      ScenarioConfig c = sweep_point(base, axes, i);
      c.scenario_id = base.scenario_id + "#" + std::to_string(i);
      try {
        results[i] = run_scenario(c);
      } catch (const std::exception& e) {
        ScenarioResult err;
        err.scenario_id = c.scenario_id;
        err.lambda = c.lambda;
        err.xi_r = c.qkd.xi_r;
        err.margin = c.margin;
        err.offered_qkd_bps = c.offered_qkd_bps;
        err.offered_classical_bps = c.offered_classical_bps;
        err.error = e.what();
        results[i] = std::move(err);
      }
    }
  };

  const size_t workers =
      std::min<size_t>(std::max(threads, 1), std::max<size_t>(total, 1));
  if (workers <= 1) {
    worker(0, total);
  } else {
    // Results land in their grid slot, so the output order never depends on
    // the thread schedule.
    std::vector<std::future<void>> futures;
    const size_t chunk = (total + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
      const size_t begin = w * chunk;
      const size_t end = std::min(total, begin + chunk);
      if (begin >= end) break;
      futures.push_back(std::async(std::launch::async, worker, begin, end));
    }
    for (auto& f : futures) f.get();
  }
  return results;
}

std::vector<LinkCapacityRow> capacity_report(const Topology& topology, const QkdParams& params) {
  std::vector<LinkCapacityRow> rows;
  rows.reserve(topology.links.size());
  for (const Link& l : topology.links) {
    LinkCapacityRow row;
    row.link_id = l.id;
    row.src_name = topology.nodes[topology.node_index(l.src)].name;
    row.dst_name = topology.nodes[topology.node_index(l.dst)].name;
    row.length_km = l.scaled_length_km;
    row.capacity_bps =
        static_cast<double>(keyrate::link_key_capacity_l(l.scaled_length_km, 0, params));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qcoex
