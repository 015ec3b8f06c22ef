#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "locald/bits.hpp"
#include "locald/graph.hpp"

namespace locald {

struct NodeLabel {
  std::uint64_t id = 0;
  Bits input;
  Bits certificate;

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

/// The radius-t neighbourhood of a node as that node sees it.
///
/// Local node 0 is the root. The view holds every node within distance t of
/// the root and every edge between them except edges joining two nodes that
/// are both at distance exactly t. Local indices are in BFS order, so every
/// non-root node has a neighbour with a smaller local index. Nothing here
/// refers back to indices of the underlying graph.
struct RadiusView {
  static constexpr int root = 0;

  int radius = 0;
  std::vector<int> distance;
  std::vector<std::vector<int>> adjacency;  // sorted local indices
  std::vector<NodeLabel> labels;

  int size() const noexcept { return static_cast<int>(distance.size()); }
  int degree(int u) const { return static_cast<int>(adjacency[static_cast<std::size_t>(u)].size()); }
  const NodeLabel& label(int u) const { return labels[static_cast<std::size_t>(u)]; }
  std::size_t edge_count() const noexcept;
};

/// The shape of a ball together with the graph nodes it came from. Used by
/// the simulator and the lift checks; never handed to algorithms.
struct BallShape {
  std::vector<int> members;  // local -> graph index, BFS order
  std::vector<int> distance;
  std::vector<std::vector<int>> adjacency;
};

BallShape ball_shape(const GraphTopology& g, int v, int t);

/// The view N_t(v) with (id, input, certificate) labels. An empty `certs`
/// means no certificates (labels carry empty strings).
RadiusView ball(const Configuration& config, const IdAssignment& ids, std::span<const Bits> certs, int v, int t);

RadiusView view_from_shape(const BallShape& shape, int t, const Configuration& config, const IdAssignment* ids,
                           std::span<const Bits> certs);

/// True iff a root-preserving isomorphism maps one view onto the other while
/// preserving inputs and certificates (and identifiers when compare_ids).
bool views_isomorphic(const RadiusView& a, const RadiusView& b, bool compare_ids = false);

}  // namespace locald
