#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qcoex/traffic.hpp"

using namespace qcoex;

TEST_CASE("scale_traffic_matrix: uniform scaling") {
  TrafficMatrix m = make_traffic_matrix({{0, 1, 2, 4e12}, {0, 2, 1, 6e12}});
  CHECK(m.total_offered_bps == doctest::Approx(10e12).epsilon(1e-15));

  const TrafficMatrix doubled = scale_traffic_matrix(m, 20e12);
  CHECK(doubled.demands[0].offered_bps == doctest::Approx(8e12).epsilon(1e-15));
  CHECK(doubled.demands[1].offered_bps == doctest::Approx(12e12).epsilon(1e-15));
  CHECK(doubled.total_offered_bps == doctest::Approx(20e12).epsilon(1e-12));

  const TrafficMatrix zero = scale_traffic_matrix(m, 0.0);
  for (const Demand& d : zero.demands) CHECK(d.offered_bps == 0.0);
  CHECK(zero.total_offered_bps == 0.0);

  // proportions survive a deep down-scale (1 kbit/s total)
  const TrafficMatrix tiny = scale_traffic_matrix(m, 1e3);
  CHECK(tiny.total_offered_bps == doctest::Approx(1e3).epsilon(1e-12));
  CHECK(tiny.demands[0].offered_bps / tiny.demands[1].offered_bps ==
        doctest::Approx(4.0 / 6.0).epsilon(1e-12));

  CHECK_THROWS_AS(scale_traffic_matrix(zero, 5.0), std::invalid_argument);
  CHECK_THROWS_AS(scale_traffic_matrix(m, -1.0), std::invalid_argument);
}

TEST_CASE("gravity_matrix: symmetry and proportionality") {
  std::map<int, double> equal;
  for (int i = 1; i <= 7; ++i) equal[i] = 1.0;
  const TrafficMatrix m = gravity_matrix(equal, 42e9);
  CHECK(m.demands.size() == 42);
  for (const Demand& d : m.demands) {
    CHECK(d.offered_bps == doctest::Approx(1e9).epsilon(1e-12));
    CHECK(d.origin != d.destination);
  }
  CHECK(m.total_offered_bps == doctest::Approx(42e9).epsilon(1e-12));

  const TrafficMatrix two = gravity_matrix({{1, 2.0}, {2, 1.0}}, 6.0);
  REQUIRE(two.demands.size() == 2);
  CHECK(two.demands[0].offered_bps == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(two.demands[1].offered_bps == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("gravity_matrix: spain7 population weights") {
  const auto& w = spain7_population_weights();
  const TrafficMatrix m = gravity_matrix(w, 10e12);
  CHECK(m.demands.size() == 42);
  CHECK(m.total_offered_bps == doctest::Approx(10e12).epsilon(1e-12));

  double min_d = 1e99, max_d = 0;
  for (const Demand& d : m.demands) {
    min_d = std::min(min_d, d.offered_bps);
    max_d = std::max(max_d, d.offered_bps);
  }
  double min_p = 1e99, max_p = 0;
  for (const auto& [i, wi] : w)
    for (const auto& [j, wj] : w)
      if (i != j) {
        min_p = std::min(min_p, wi * wj);
        max_p = std::max(max_p, wi * wj);
      }
  CHECK(min_d / max_d == doctest::Approx(min_p / max_p).epsilon(1e-12));

  // demand ids are positions, ordered by (origin, destination)
  for (size_t i = 0; i < m.demands.size(); ++i) {
    CHECK(m.demands[i].id == static_cast<int>(i));
    if (i > 0) {
      const Demand& a = m.demands[i - 1];
      const Demand& b = m.demands[i];
      CHECK((a.origin < b.origin ||
             (a.origin == b.origin && a.destination < b.destination)));
    }
  }
}

TEST_CASE("gravity_matrix validation") {
  CHECK_THROWS_AS(gravity_matrix({{1, 1.0}}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gravity_matrix({{1, 1.0}, {2, 0.0}}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gravity_matrix({{1, 1.0}, {2, -2.0}}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gravity_matrix({{1, 1.0}, {2, 1.0}}, -1.0), std::invalid_argument);
}

TEST_CASE("make_traffic_matrix validation") {
  CHECK_THROWS_AS(make_traffic_matrix({{0, 1, 1, 5.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_traffic_matrix({{0, 1, 2, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_traffic_matrix({{0, 1, 2, -2.0}}), std::invalid_argument);
}
