#include "qcoex/qkd_plan.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qcoex {

LinkCapacityCache::LinkCapacityCache(const Topology& topology, const QkdParams& params)
    : topology_(topology), params_(params) {
  table_.resize(topology.links.size());
}

long double LinkCapacityCache::at(int link_id, int n_active_channels) {
  auto& row = table_[link_id];
  if (row.empty())
    row.assign(static_cast<size_t>(topology_.links[link_id].wdm_slots) + 2,
               std::numeric_limits<long double>::quiet_NaN());
  long double& cell = row.at(n_active_channels);
  if (std::isnan(static_cast<double>(cell)))
    cell = keyrate::link_key_capacity_l(topology_.links[link_id].scaled_length_km,
                                        n_active_channels, params_);
  return cell;
}

long double residual_capacity(const QkdLinkState& state) {
  const long double r = state.effective_capacity_bps - state.carried_bps;
  return r > 0 ? r : 0;
}

QkdPlan plan_qkd(const Topology& topology, const TrafficMatrix& demands,
                 const QkdParams& params, double margin, int k) {
  LinkCapacityCache capacities(topology, params);
  return plan_qkd(topology, demands, params, margin, k, capacities);
}

QkdPlan plan_qkd(const Topology& topology, const TrafficMatrix& demands,
                 const QkdParams& params, double margin, int k,
                 LinkCapacityCache& capacities) {
  if (!(margin >= 0) || margin >= 1) throw std::invalid_argument("margin: must be in [0, 1)");
  if (k < 1) throw std::invalid_argument("k: must be >= 1");
  params.validate();

  QkdPlan plan;
  plan.total_offered_bps = demands.total_offered_bps;
  plan.link_states.reserve(topology.links.size());
  for (const Link& l : topology.links) {
    QkdLinkState st;
    st.link_id = l.id;
    st.capacity_bps = capacities.at(l.id, 0);
    st.effective_capacity_bps = (1.0L - static_cast<long double>(margin)) * st.capacity_bps;
    st.carried_bps = 0;
    plan.link_states.push_back(st);
  }

  const size_t n = demands.demands.size();
  std::vector<long double> remaining(n);
  std::vector<bool> unservable(n, false);
  std::vector<std::vector<Path>> paths(n);  // filled on first use
  for (size_t i = 0; i < n; ++i) remaining[i] = demands.demands[i].offered_bps;

  for (;;) {
    // Demand with the largest yet-unallocated traffic; lowest id on ties.
    int pick = -1;
    long double most = 0;
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

    // Path with the largest bottleneck residual; the candidate list is sorted
    // by (length, lex), so a strict comparison keeps the shorter-then-lex tie-break.
    const Path* best = nullptr;
    long double best_residual = 0;
    for (const Path& p : paths[pick]) {
      long double bottleneck = std::numeric_limits<long double>::max();
      for (int link_id : p.link_ids) {
        const long double r = residual_capacity(plan.link_states[link_id]);
        if (r < bottleneck) bottleneck = r;
      }
      if (bottleneck > best_residual) {
        best_residual = bottleneck;
        best = &p;
      }
    }
    if (best == nullptr) {
      unservable[pick] = true;
      continue;
    }

    const long double carry = remaining[pick] < best_residual ? remaining[pick] : best_residual;
    for (int link_id : best->link_ids) {
      QkdLinkState& st = plan.link_states[link_id];
      const long double res = st.effective_capacity_bps - st.carried_bps;
      // Saturate exactly: a 1-ulp leftover residual would otherwise keep the
      // path alive and stall the loop on sub-ulp carries.
      if (carry >= res)
        st.carried_bps = st.effective_capacity_bps;
      else
        st.carried_bps += carry;
    }
    plan.routes.push_back({d.id, *best, carry});
    remaining[pick] = remaining[pick] > carry ? remaining[pick] - carry : 0;
  }

  plan.per_demand_blocked_bps.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    plan.per_demand_blocked_bps[i] = remaining[i];
    plan.total_blocked_bps += remaining[i];
  }
  return plan;
}

}  // namespace qcoex
