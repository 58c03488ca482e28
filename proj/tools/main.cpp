#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "qcoex/config.hpp"
#include "qcoex/results_io.hpp"

namespace {

using namespace qcoex;

// `<topology>` CLI arguments accept the built-in name or a config file whose
// topology (and qkd_params, for `capacity`) sections are used.
std::pair<TopologySpec, QkdParams> topology_arg(const std::string& arg) {
  if (arg == "spain7") return {TopologySpec{}, QkdParams{}};
  LoadedConfig cfg = load_config(arg);
  return {cfg.base.topology, cfg.base.qkd};
}

int cmd_capacity(const std::string& topology, double lambda) {
  const auto [spec, params] = topology_arg(topology);
  const Topology topo = build_topology(spec, lambda);
  const auto rows = capacity_report(topo, params);
  std::printf("%-4s %-22s %12s %18s\n", "link", "route", "length_km", "capacity_bit_s");
  for (const auto& r : rows)
    std::printf("%-4d %-22s %12.4f %18.0f\n", r.link_id,
                (r.src_name + "->" + r.dst_name).c_str(), r.length_km, r.capacity_bps);
  return 0;
}

int cmd_paths(const std::string& topology, int src, int dst, int k) {
  const auto [spec, params] = topology_arg(topology);
  (void)params;
  const Topology topo = build_topology(spec, 1.0);
  const auto paths = k_shortest_paths(topo, src, dst, k);
  if (paths.empty()) {
    std::printf("no path from %d to %d\n", src, dst);
    return 0;
  }
  for (size_t i = 0; i < paths.size(); ++i) {
    std::printf("#%zu  %10.3f km  ", i + 1, paths[i].total_length_km);
    for (size_t n = 0; n < paths[i].node_ids.size(); ++n)
      std::printf("%s%d", n ? "-" : "", paths[i].node_ids[n]);
    std::printf("\n");
  }
  return 0;
}

int emit(const LoadedConfig& cfg, const std::vector<ScenarioResult>& results,
         const std::string& out_dir, bool detail) {
  RunManifest manifest;
  manifest.tool_version = kToolVersion;
  manifest.config_digest = cfg.digest;
  manifest.started_at_utc = utc_timestamp();
  manifest.row_count = results.size();
  emit_results(results, out_dir, detail, manifest);
  size_t failed = 0;
  for (const auto& r : results)
    if (!r.error.empty()) {
      std::cerr << "scenario " << r.scenario_id << " failed: " << r.error << "\n";
      ++failed;
    }
  std::printf("%zu row(s) -> %s\n", results.size(), out_dir.c_str());
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CV-QKD / classical WDM coexistence planner"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out";
  bool detail = false;
  int threads = 1;

  auto add_io_flags = [&](CLI::App* cmd) {
    cmd->add_option("config", config_path, "scenario config (JSON)")->required();
    cmd->add_option("--out", out_dir, "output directory (default: out)");
    cmd->add_flag("--detail", detail, "also write the per-link links.csv");
    cmd->add_option("--threads", threads, "worker threads (does not affect output bytes)");
  };

  CLI::App* run = app.add_subcommand("run", "run the base scenario of a config");
  add_io_flags(run);
  CLI::App* swp = app.add_subcommand("sweep", "run the config's sweep grid");
  add_io_flags(swp);

  std::string topo_arg;
  double lambda = 1.0;
  CLI::App* cap = app.add_subcommand("capacity", "per-link key capacities at n = 0");
  cap->add_option("topology", topo_arg, "\"spain7\" or a config file")->required();
  cap->add_option("lambda", lambda, "distance scaling factor")->required();

  int src = 0, dst = 0, k = 5;
  CLI::App* pth = app.add_subcommand("paths", "k shortest paths between two nodes");
  pth->add_option("topology", topo_arg, "\"spain7\" or a config file")->required();
  pth->add_option("src", src, "origin node id")->required();
  pth->add_option("dst", dst, "destination node id")->required();
  pth->add_option("k", k, "number of paths")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cap->parsed()) return cmd_capacity(topo_arg, lambda);
    if (pth->parsed()) return cmd_paths(topo_arg, src, dst, k);
    LoadedConfig cfg = load_config(config_path);
    if (run->parsed()) {
      std::vector<ScenarioResult> results = {run_scenario(cfg.base)};
      return emit(cfg, results, out_dir, detail);
    }
    if (swp->parsed()) {
      const auto results = sweep(cfg.base, cfg.axes, threads);
      return emit(cfg, results, out_dir, detail);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
