#include "locald/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <string>

#include "locald/error.hpp"

namespace locald {

GraphTopology::GraphTopology() : adjacency_(1) {}

bool GraphTopology::adjacent(int u, int v) const {
  const auto& adj = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> GraphTopology::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < size(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

GraphTopology build_graph(int n, std::span<const Edge> edges) {
  if (n < 1) throw Error(ErrorCode::invalid_input, "graph needs at least one node");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::index_out_of_range,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." + std::to_string(n - 1));
    if (u == v) throw Error(ErrorCode::self_loop, "node " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second)
      throw Error(ErrorCode::duplicate_edge, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<char> reached(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[static_cast<std::size_t>(u)])
      if (!reached[static_cast<std::size_t>(v)]) {
        reached[static_cast<std::size_t>(v)] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  if (count != n)
    throw Error(ErrorCode::disconnected, std::to_string(n - count) + " node(s) unreachable from node 0");

  GraphTopology g;
  g.adjacency_ = std::move(adj);
  g.edge_count_ = seen.size();
  return g;
}

GraphTopology path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

GraphTopology cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::invalid_input, "a simple cycle needs at least 3 nodes");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

GraphTopology complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return build_graph(n, e);
}

GraphTopology star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return build_graph(leaves + 1, e);
}

std::vector<int> bfs_distances(const GraphTopology& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u))
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push(v);
      }
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const GraphTopology& g) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) out.push_back(bfs_distances(g, v));
  return out;
}

int eccentricity(const GraphTopology& g, int v) {
  auto d = bfs_distances(g, v);
  return *std::max_element(d.begin(), d.end());
}

int diameter(const GraphTopology& g) {
  int best = 0;
  for (int v = 0; v < g.size(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

std::optional<std::vector<int>> two_coloring(const GraphTopology& g) {
  auto dist = bfs_distances(g, 0);
  for (auto [u, v] : g.edges())
    if ((dist[static_cast<std::size_t>(u)] - dist[static_cast<std::size_t>(v)]) % 2 == 0) return std::nullopt;
  for (auto& d : dist) d %= 2;
  return dist;
}

GraphTopology relabel(const GraphTopology& g, std::span<const int> perm) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return build_graph(g.size(), e);
}

Configuration::Configuration(GraphTopology topology)
    : topology_(std::move(topology)), inputs_(static_cast<std::size_t>(topology_.size())) {}

Configuration::Configuration(GraphTopology topology, std::vector<Bits> inputs)
    : topology_(std::move(topology)), inputs_(std::move(inputs)) {
  if (inputs_.size() != static_cast<std::size_t>(topology_.size()))
    throw Error(ErrorCode::invalid_input, "expected " + std::to_string(topology_.size()) + " inputs, got " +
                                              std::to_string(inputs_.size()));
  for (const auto& w : inputs_)
    if (!is_bit_string(w)) throw Error(ErrorCode::invalid_input, "input '" + w + "' is not a bit string");
}

std::size_t Configuration::max_input_length() const noexcept {
  std::size_t m = 0;
  for (const auto& w : inputs_) m = std::max(m, w.size());
  return m;
}

bool Configuration::has_empty_inputs() const noexcept {
  return std::all_of(inputs_.begin(), inputs_.end(), [](const Bits& w) { return w.empty(); });
}

Configuration relabel(const Configuration& c, std::span<const int> perm) {
  std::vector<Bits> inputs(static_cast<std::size_t>(c.size()));
  for (int v = 0; v < c.size(); ++v) inputs[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = c.input(v);
  return Configuration(relabel(c.topology(), perm), std::move(inputs));
}

std::uint64_t default_universe_bound(int n, int degree) noexcept {
  const auto base = static_cast<std::uint64_t>(std::max(n, 1));
  std::uint64_t bound = 1;
  for (int i = 0; i < degree; ++i) {
    if (bound > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    bound *= base;
  }
  return std::max(bound, base);
}

IdAssignment::IdAssignment(std::vector<std::uint64_t> ids, std::uint64_t universe_bound, int degree)
    : ids_(std::move(ids)), universe_bound_(universe_bound) {
  const int n = static_cast<int>(ids_.size());
  if (universe_bound_ > default_universe_bound(n, degree))
    throw Error(ErrorCode::invalid_input, "identifier universe larger than n^" + std::to_string(degree));
  std::vector<std::uint64_t> sorted = ids_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::invalid_input, "identifiers are not distinct");
  if (!sorted.empty() && (sorted.front() < 1 || sorted.back() > universe_bound_))
    throw Error(ErrorCode::invalid_input, "identifier outside 1.." + std::to_string(universe_bound_));
}

IdAssignment IdAssignment::sequential(int n) {
  std::vector<std::uint64_t> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(i + 1);
  return IdAssignment(std::move(ids), default_universe_bound(n));
}

}  // namespace locald
