#pragma once

#include <vector>

#include "qcoex/cvqkd.hpp"
#include "qcoex/topology.hpp"
#include "qcoex/traffic.hpp"

namespace qcoex {

// Memoized per-(link, n) secure-key capacities for one topology + parameter
// set, kept in long double (see cvqkd.hpp on why). Not thread-safe; each
// planning run owns one.
class LinkCapacityCache {
 public:
  LinkCapacityCache(const Topology& topology, const QkdParams& params);
  long double at(int link_id, int n_active_channels);

 private:
  const Topology& topology_;
  const QkdParams& params_;
  std::vector<std::vector<long double>> table_;  // [link][n], NaN = not computed
};

struct QkdLinkState {
  int link_id = 0;
  long double capacity_bps = 0;            // key capacity with n = 0 classical channels
  long double effective_capacity_bps = 0;  // (1 - margin) * capacity_bps
  long double carried_bps = 0;             // aggregated CV-QKD traffic
};

// effective_capacity_bps - carried_bps, floored at 0.
long double residual_capacity(const QkdLinkState& state);

struct QkdRoute {
  int demand_id = 0;
  Path path;
  long double carried_bps = 0;
};

struct QkdPlan {
  std::vector<QkdLinkState> link_states;           // indexed by link id
  std::vector<QkdRoute> routes;
  std::vector<long double> per_demand_blocked_bps; // indexed by demand id
  long double total_blocked_bps = 0;
  long double total_offered_bps = 0;
};

// Opaque (trusted-relay) CV-QKD allocation: largest unallocated demand first,
// over its k shortest paths the one with the largest bottleneck residual,
// carrying as much as fits. Link capacities are evaluated at n = 0 classical
// channels. Infeasibility shows up as blocked traffic, never as an error.
QkdPlan plan_qkd(const Topology& topology, const TrafficMatrix& demands,
                 const QkdParams& params, double margin, int k);

QkdPlan plan_qkd(const Topology& topology, const TrafficMatrix& demands,
                 const QkdParams& params, double margin, int k, LinkCapacityCache& capacities);

}  // namespace qcoex
