#include "qcoex/topology.hpp"

#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace qcoex {

int Topology::node_index(int node_id) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id == node_id) return static_cast<int>(i);
  return -1;
}

Topology make_topology(std::vector<Node> nodes, std::vector<Link> links, double lambda) {
  if (!(lambda > 0)) throw std::invalid_argument("lambda: must be > 0");
  if (nodes.empty()) throw std::invalid_argument("topology: needs at least one node");

  std::unordered_map<int, int> index;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (!index.emplace(nodes[i].id, static_cast<int>(i)).second)
      throw std::invalid_argument("topology: duplicate node id " + std::to_string(nodes[i].id));
  }

  Topology topo;
  topo.lambda = lambda;
  topo.nodes = std::move(nodes);
  topo.out_links.assign(topo.nodes.size(), {});
  for (size_t i = 0; i < links.size(); ++i) {
    Link& l = links[i];
    l.id = static_cast<int>(i);
    auto src = index.find(l.src);
    auto dst = index.find(l.dst);
    if (src == index.end() || dst == index.end())
      throw std::invalid_argument("topology: link " + std::to_string(l.id) +
                                  " references an unknown node");
    if (l.src == l.dst)
      throw std::invalid_argument("topology: link " + std::to_string(l.id) + " is a self-loop");
    if (!(l.base_length_km > 0))
      throw std::invalid_argument("topology: link " + std::to_string(l.id) +
                                  " length must be > 0");
    if (l.wdm_slots < 0)
      throw std::invalid_argument("topology: link " + std::to_string(l.id) +
                                  " wdm_slots must be >= 0");
    l.scaled_length_km = lambda * l.base_length_km;
    topo.out_links[src->second].push_back(l.id);
  }
  topo.links = std::move(links);
  return topo;
}

Topology build_spanish_topology(double lambda) {
  std::vector<Node> nodes = {
      {1, "Madrid"}, {2, "Zaragoza"}, {3, "Barcelona"}, {4, "Valencia"},
      {5, "Murcia"}, {6, "Malaga"},   {7, "Sevilla"},
  };
  struct Pair {
    int a, b;
    double km;
  };
  const Pair pairs[] = {
      {3, 4, 303}, {4, 5, 177}, {5, 6, 323}, {6, 7, 158},
      {7, 1, 391}, {1, 2, 272}, {2, 3, 257}, {1, 4, 302},
  };
  std::vector<Link> links;
  links.reserve(16);
  for (const Pair& p : pairs) {
    links.push_back({0, p.a, p.b, p.km, 0.0, 40});
    links.push_back({0, p.b, p.a, p.km, 0.0, 40});
  }
  return make_topology(std::move(nodes), std::move(links), lambda);
}

bool path_less(const Path& a, const Path& b) {
  if (a.total_length_km != b.total_length_km) return a.total_length_km < b.total_length_km;
  return a.node_ids < b.node_ids;
}

std::vector<Path> k_shortest_paths(const Topology& topology, int origin, int destination,
                                   int k) {
  if (k < 1) throw std::invalid_argument("k: must be >= 1");
  if (origin == destination)
    throw std::invalid_argument("k_shortest_paths: origin equals destination");
  const int oi = topology.node_index(origin);
  const int di = topology.node_index(destination);
  if (oi < 0) throw std::invalid_argument("k_shortest_paths: unknown origin node");
  if (di < 0) throw std::invalid_argument("k_shortest_paths: unknown destination node");

  // Best-first search over loopless partial paths. Edge weights are strictly
  // positive, so complete paths pop in (length, lex node sequence) order.
  struct Partial {
    double length;
    std::vector<int> node_ids;
    std::vector<int> link_ids;
    std::vector<bool> visited;
  };
  auto worse = [](const Partial& a, const Partial& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.node_ids > b.node_ids;
  };
  std::priority_queue<Partial, std::vector<Partial>, decltype(worse)> queue(worse);

  Partial start;
  start.length = 0.0;
  start.node_ids = {origin};
  start.visited.assign(topology.nodes.size(), false);
  start.visited[oi] = true;
  queue.push(std::move(start));

  std::vector<Path> result;
  while (!queue.empty() && static_cast<int>(result.size()) < k) {
    Partial cur = queue.top();
    queue.pop();
    const int tail = cur.node_ids.back();
    if (tail == destination) {
      result.push_back({cur.link_ids, cur.node_ids, cur.length});
      continue;
    }
    const int tail_index = topology.node_index(tail);
    for (int link_id : topology.out_links[tail_index]) {
      const Link& l = topology.links[link_id];
      const int next_index = topology.node_index(l.dst);
      if (cur.visited[next_index]) continue;
      Partial next = cur;
      next.length += l.scaled_length_km;
      next.node_ids.push_back(l.dst);
      next.link_ids.push_back(link_id);
      next.visited[next_index] = true;
      queue.push(std::move(next));
    }
  }
  return result;
}

}  // namespace qcoex
