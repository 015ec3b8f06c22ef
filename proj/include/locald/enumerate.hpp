#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "locald/bits.hpp"
#include "locald/graph.hpp"

namespace locald {

enum class InstanceKind { connected_graphs, trees, labeled_trees };

inline constexpr int default_enumeration_cap = 8;

/// connected_graphs / trees: one representative per isomorphism class, each
/// in canonical labelling, sorted by canonical form. labeled_trees: every
/// labelled tree on 0..n-1 (n^(n-2) of them for n >= 2).
/// Throws CapExceeded when n > cap.
std::vector<GraphTopology> enumerate_instances(InstanceKind kind, int n, int cap = default_enumeration_cap);

/// Exact canonical form: the lexicographically smallest upper-triangle
/// adjacency string (column order (0,1),(0,2),(1,2),(0,3),...) over all node
/// permutations. Isomorphic graphs and only those share it.
Bits canonical_form(const GraphTopology& g);

/// A permutation realising canonical_form (node v goes to position perm[v]).
std::vector<int> canonical_labeling(const GraphTopology& g);

bool graphs_isomorphic(const GraphTopology& a, const GraphTopology& b);

/// Tree from a Pruefer sequence over 0..n-1 (sequence length n-2, n >= 2).
GraphTopology prufer_decode(std::span<const int> sequence);

GraphTopology random_tree(int n, std::mt19937_64& rng);

}  // namespace locald
