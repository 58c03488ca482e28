#pragma once

#include <string>
#include <vector>

namespace qcoex {

struct Node {
  int id = 0;
  std::string name;
};

// Directed fiber link. Link ids double as indices into Topology::links.
struct Link {
  int id = 0;
  int src = 0;
  int dst = 0;
  double base_length_km = 0.0;
  double scaled_length_km = 0.0;
  int wdm_slots = 40;
};

struct Topology {
  std::vector<Node> nodes;
  std::vector<Link> links;
  double lambda = 1.0;

  // Outgoing link ids per node, in link-id order. Rebuilt by make_topology.
  std::vector<std::vector<int>> out_links;  // indexed like nodes
  int node_index(int node_id) const;        // -1 if unknown
};

// Validates and indexes a topology: node ids unique, link endpoints known,
// link ids = positions, scaled lengths = lambda * base lengths.
Topology make_topology(std::vector<Node> nodes, std::vector<Link> links, double lambda);

// The built-in 7-node fixture ("spain7"): 8 bidirectional fiber pairs listed
// as 16 directed links, 40 WDM slots each, all lengths scaled by lambda.
Topology build_spanish_topology(double lambda);

// A loopless directed path; consecutive links share their intermediate node.
struct Path {
  std::vector<int> link_ids;
  std::vector<int> node_ids;  // origin .. destination, one longer than link_ids
  double total_length_km = 0.0;
};

// Orders by (total length, lexicographic node sequence).
bool path_less(const Path& a, const Path& b);

// Up to k shortest loopless paths from origin to destination, sorted by
// (length, lexicographic node sequence). Returns an empty list for a
// disconnected pair. Deterministic.
std::vector<Path> k_shortest_paths(const Topology& topology, int origin, int destination,
                                   int k);

}  // namespace qcoex
