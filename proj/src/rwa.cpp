#include "qcoex/rwa.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcoex {

WdmOccupancy WdmOccupancy::empty_for(const Topology& topology) {
  WdmOccupancy occ;
  occ.slots.reserve(topology.links.size());
  for (const Link& l : topology.links) occ.slots.emplace_back(l.wdm_slots, false);
  occ.active_count.assign(topology.links.size(), 0);
  return occ;
}

std::optional<int> first_fit_wavelength(const Path& path, const WdmOccupancy& occupancy,
                                        const Topology& topology) {
  int max_slot = 0;
  for (int link_id : path.link_ids)
    max_slot = std::max(max_slot, topology.links[link_id].wdm_slots);
  for (int s = 0; s < max_slot; ++s) {
    bool free = true;
    for (int link_id : path.link_ids) {
      const auto& v = occupancy.slots[link_id];
      if (s >= static_cast<int>(v.size()) || v[s]) {
        free = false;
        break;
      }
    }
    if (free) return s;
  }
  return std::nullopt;
}

bool qkd_feasible_after_add(const Path& path, const WdmOccupancy& occupancy,
                            const QkdPlan& qkd_plan, LinkCapacityCache& capacities) {
  for (int link_id : path.link_ids) {
    const long double carried = qkd_plan.link_states[link_id].carried_bps;
    if (carried <= 0) continue;
    if (capacities.at(link_id, occupancy.active_count[link_id] + 1) < carried) return false;
  }
  return true;
}

bool qkd_feasible_after_add(const Path& path, const WdmOccupancy& occupancy,
                            const QkdPlan& qkd_plan, const Topology& topology,
                            const QkdParams& params) {
  LinkCapacityCache capacities(topology, params);
  return qkd_feasible_after_add(path, occupancy, qkd_plan, capacities);
}

RwaPlan plan_classical(const Topology& topology, const TrafficMatrix& demands,
                       const QkdPlan& qkd_plan, const QkdParams& params, int k) {
  LinkCapacityCache capacities(topology, params);
  return plan_classical(topology, demands, qkd_plan, params, k, capacities);
}

RwaPlan plan_classical(const Topology& topology, const TrafficMatrix& demands,
                       const QkdPlan& qkd_plan, const QkdParams& params, int k,
                       LinkCapacityCache& capacities) {
  if (k < 1) throw std::invalid_argument("k: must be >= 1");
  if (qkd_plan.link_states.size() != topology.links.size())
    throw std::invalid_argument("plan_classical: QKD plan does not match the topology");
  params.validate();

  RwaPlan plan;
  plan.occupancy = WdmOccupancy::empty_for(topology);

  const size_t n = demands.demands.size();
  std::vector<double> remaining(n);
  std::vector<bool> unservable(n, false);
  std::vector<std::vector<Path>> paths(n);
  for (size_t i = 0; i < n; ++i) remaining[i] = demands.demands[i].offered_bps;

  for (;;) {
    int pick = -1;
    double most = 0;
    for (size_t i = 0; i < n; ++i) {
      if (unservable[i] || remaining[i] <= 0) continue;
      if (remaining[i] > most) {
        most = remaining[i];
        pick = static_cast<int>(i);
      }
    }
    if (pick < 0) break;

    const Demand& d = demands.demands[pick];
    if (paths[pick].empty())
      paths[pick] = k_shortest_paths(topology, d.origin, d.destination, k);

    // Shortest path that has a common free slot and stays QKD-feasible.
    bool placed = false;
    for (const Path& p : paths[pick]) {
      const auto slot = first_fit_wavelength(p, plan.occupancy, topology);
      if (!slot) continue;
      if (!qkd_feasible_after_add(p, plan.occupancy, qkd_plan, capacities)) continue;
      for (int link_id : p.link_ids) {
        plan.occupancy.slots[link_id][*slot] = true;
        plan.occupancy.active_count[link_id] += 1;
      }
      plan.lightpaths.push_back({d.id, p, *slot});
      remaining[pick] = std::max(0.0, remaining[pick] - kLightpathRateBps);
      placed = true;
      break;
    }
    if (!placed) unservable[pick] = true;  // occupancy only grows; final
  }

  plan.per_demand_blocked_bps.assign(n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    plan.per_demand_blocked_bps[i] = remaining[i];
    plan.total_blocked_bps += remaining[i];
  }
  return plan;
}

}  // namespace qcoex
