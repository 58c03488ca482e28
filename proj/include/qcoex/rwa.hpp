#pragma once

#include <optional>
#include <vector>

#include "qcoex/qkd_plan.hpp"

namespace qcoex {

// Fixed traffic carried by one lightpath (one WDM slot).
inline constexpr double kLightpathRateBps = 100e9;

struct WdmOccupancy {
  std::vector<std::vector<bool>> slots;  // [link id][slot index]
  std::vector<int> active_count;         // n per link

  static WdmOccupancy empty_for(const Topology& topology);
};

struct Lightpath {
  int demand_id = 0;
  Path path;
  int slot_index = 0;  // same slot on every link of the path
};

struct RwaPlan {
  std::vector<Lightpath> lightpaths;
  WdmOccupancy occupancy;
  std::vector<double> per_demand_blocked_bps;  // indexed by demand id
  double total_blocked_bps = 0.0;
};

// Lowest slot index free on every link of the path, or nullopt.
std::optional<int> first_fit_wavelength(const Path& path, const WdmOccupancy& occupancy,
                                        const Topology& topology);

// True iff adding one classical channel to every link of the path keeps each
// link's key capacity at or above the CV-QKD traffic it carries. Links with
// zero carried QKD traffic are always feasible.
bool qkd_feasible_after_add(const Path& path, const WdmOccupancy& occupancy,
                            const QkdPlan& qkd_plan, const Topology& topology,
                            const QkdParams& params);
bool qkd_feasible_after_add(const Path& path, const WdmOccupancy& occupancy,
                            const QkdPlan& qkd_plan, LinkCapacityCache& capacities);

// Transparent fixed-grid RWA with wavelength continuity and the QKD
// feasibility constraint: largest unallocated demand first, one 100 Gbit/s
// lightpath per step on the shortest eligible of its k shortest paths,
// first-fit slot assignment. A residual below the lightpath rate still takes
// a full lightpath; blocked traffic is max(0, offered - carried).
RwaPlan plan_classical(const Topology& topology, const TrafficMatrix& demands,
                       const QkdPlan& qkd_plan, const QkdParams& params, int k);

RwaPlan plan_classical(const Topology& topology, const TrafficMatrix& demands,
                       const QkdPlan& qkd_plan, const QkdParams& params, int k,
                       LinkCapacityCache& capacities);

}  // namespace qcoex
