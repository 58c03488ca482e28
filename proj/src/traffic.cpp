#include "qcoex/traffic.hpp"

#include <stdexcept>
#include <string>

namespace qcoex {

TrafficMatrix make_traffic_matrix(std::vector<Demand> demands) {
  TrafficMatrix m;
  double total = 0.0;
  for (size_t i = 0; i < demands.size(); ++i) {
    Demand& d = demands[i];
    d.id = static_cast<int>(i);
    if (d.origin == d.destination)
      throw std::invalid_argument("demand " + std::to_string(d.id) +
                                  ": origin equals destination");
    if (!(d.offered_bps > 0))
      throw std::invalid_argument("demand " + std::to_string(d.id) +
                                  ": offered_bps must be > 0");
    total += d.offered_bps;
  }
  m.demands = std::move(demands);
  m.total_offered_bps = total;
  return m;
}

TrafficMatrix scale_traffic_matrix(const TrafficMatrix& matrix, double target_total_bps) {
  if (!(target_total_bps >= 0))
    throw std::invalid_argument("target_total_bps: must be >= 0");
  TrafficMatrix out = matrix;
  if (target_total_bps == 0.0) {
    for (Demand& d : out.demands) d.offered_bps = 0.0;
    out.total_offered_bps = 0.0;
    return out;
  }
  if (!(matrix.total_offered_bps > 0))
    throw std::invalid_argument("scale_traffic_matrix: current total is zero");
  const double ratio = target_total_bps / matrix.total_offered_bps;
  double total = 0.0;
  for (Demand& d : out.demands) {
    d.offered_bps *= ratio;
    total += d.offered_bps;
  }
  out.total_offered_bps = total;
  return out;
}

TrafficMatrix gravity_matrix(const std::map<int, double>& node_weights, double total_bps) {
  if (node_weights.size() < 2)
    throw std::invalid_argument("gravity_matrix: needs at least 2 nodes");
  if (!(total_bps >= 0)) throw std::invalid_argument("total_bps: must be >= 0");
  double product_sum = 0.0;
  for (const auto& [i, wi] : node_weights) {
    if (!(wi > 0))
      throw std::invalid_argument("gravity_matrix: weight of node " + std::to_string(i) +
                                  " must be > 0");
    for (const auto& [j, wj] : node_weights)
      if (i != j) product_sum += wi * wj;
  }
  std::vector<Demand> demands;
  demands.reserve(node_weights.size() * (node_weights.size() - 1));
  for (const auto& [i, wi] : node_weights)
    for (const auto& [j, wj] : node_weights)
      if (i != j) demands.push_back({0, i, j, total_bps * (wi * wj) / product_sum});
  if (total_bps == 0.0) {
    // make_traffic_matrix requires positive demands; build the zero matrix
    // with the same shape directly.
    TrafficMatrix m;
    m.demands = std::move(demands);
    for (size_t k = 0; k < m.demands.size(); ++k) m.demands[k].id = static_cast<int>(k);
    m.total_offered_bps = 0.0;
    return m;
  }
  return make_traffic_matrix(std::move(demands));
}

const std::map<int, double>& spain7_population_weights() {
  static const std::map<int, double> weights = {
      {1, 3.2}, {2, 0.67}, {3, 1.6}, {4, 0.79}, {5, 0.45}, {6, 0.57}, {7, 0.69},
  };
  return weights;
}

}  // namespace qcoex
