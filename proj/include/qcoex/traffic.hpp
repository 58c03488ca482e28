#pragma once

#include <map>
#include <vector>

#include "qcoex/topology.hpp"

namespace qcoex {

struct Demand {
  int id = 0;
  int origin = 0;
  int destination = 0;
  double offered_bps = 0.0;
};

struct TrafficMatrix {
  std::vector<Demand> demands;  // ids equal positions
  double total_offered_bps = 0.0;
};

TrafficMatrix make_traffic_matrix(std::vector<Demand> demands);

// Multiplies every demand by target_total_bps / current total. Demand
// proportions are preserved; the new total matches the target to 1 part in
// 1e12. A zero-total matrix can only be scaled to zero.
TrafficMatrix scale_traffic_matrix(const TrafficMatrix& matrix, double target_total_bps);

// Gravity model: demand(i -> j) proportional to w_i * w_j for every ordered
// pair i != j, normalized to total_bps. Keys of node_weights are node ids;
// demands come out sorted by (origin, destination).
TrafficMatrix gravity_matrix(const std::map<int, double>& node_weights, double total_bps);

// Metro populations (millions) for the spain7 fixture nodes.
const std::map<int, double>& spain7_population_weights();

}  // namespace qcoex
