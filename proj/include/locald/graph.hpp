#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "locald/bits.hpp"

namespace locald {

using Edge = std::pair<int, int>;

/// A connected, simple, undirected graph on nodes 0..n-1.
///
/// Instances only come out of build_graph (or helpers that call it), so every
/// GraphTopology in circulation satisfies the invariants: no self-loops, no
/// parallel edges, symmetric sorted adjacency, connected, n >= 1.
class GraphTopology {
 public:
  GraphTopology();  // the single-node graph

  int size() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool adjacent(int u, int v) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const GraphTopology&, const GraphTopology&) = default;

 private:
  friend GraphTopology build_graph(int n, std::span<const Edge> edges);
  std::vector<std::vector<int>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Validates and builds. Throws Error with SelfLoop, DuplicateEdge,
/// Disconnected or IndexOutOfRange.
GraphTopology build_graph(int n, std::span<const Edge> edges);
inline GraphTopology build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

GraphTopology path_graph(int n);
GraphTopology cycle_graph(int n);
GraphTopology complete_graph(int n);
GraphTopology star_graph(int leaves);

/// BFS distances from `source` (all finite since graphs are connected).
std::vector<int> bfs_distances(const GraphTopology& g, int source);
std::vector<std::vector<int>> all_pairs_distances(const GraphTopology& g);
int eccentricity(const GraphTopology& g, int v);
int diameter(const GraphTopology& g);

inline bool is_tree(const GraphTopology& g) noexcept {
  return g.edge_count() + 1 == static_cast<std::size_t>(g.size());
}
inline bool has_cycle(const GraphTopology& g) noexcept { return !is_tree(g); }

/// Some proper 2-colouring, or nothing if the graph has an odd cycle.
std::optional<std::vector<int>> two_coloring(const GraphTopology& g);

/// Relabels node v as perm[v].
GraphTopology relabel(const GraphTopology& g, std::span<const int> perm);

/// What a distributed language classifies: a graph plus one binary
/// input string per node.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(GraphTopology topology);
  /// Throws InvalidInput unless there is exactly one bit string per node.
  Configuration(GraphTopology topology, std::vector<Bits> inputs);

  int size() const noexcept { return topology_.size(); }
  const GraphTopology& topology() const noexcept { return topology_; }
  const std::vector<Bits>& inputs() const noexcept { return inputs_; }
  const Bits& input(int v) const { return inputs_[static_cast<std::size_t>(v)]; }
  std::size_t max_input_length() const noexcept;
  bool has_empty_inputs() const noexcept;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  GraphTopology topology_;
  std::vector<Bits> inputs_ = {Bits{}};
};

Configuration relabel(const Configuration& c, std::span<const int> perm);

/// Injective map from nodes to identifiers in 1..universe_bound.
class IdAssignment {
 public:
  /// Throws InvalidInput if ids are not distinct, leave 1..universe_bound,
  /// or universe_bound exceeds n^degree.
  IdAssignment(std::vector<std::uint64_t> ids, std::uint64_t universe_bound, int degree = 2);

  /// Ids 1..n in node order.
  static IdAssignment sequential(int n);

  std::uint64_t operator[](int v) const { return ids_[static_cast<std::size_t>(v)]; }
  int size() const noexcept { return static_cast<int>(ids_.size()); }
  std::uint64_t universe_bound() const noexcept { return universe_bound_; }
  const std::vector<std::uint64_t>& ids() const noexcept { return ids_; }

  friend bool operator==(const IdAssignment&, const IdAssignment&) = default;

 private:
  std::vector<std::uint64_t> ids_;
  std::uint64_t universe_bound_;
};

/// n^degree, saturating; at least n so that 1..n is always admissible.
std::uint64_t default_universe_bound(int n, int degree = 2) noexcept;

}  // namespace locald
