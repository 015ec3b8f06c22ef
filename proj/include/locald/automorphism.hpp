#pragma once

#include <optional>
#include <span>
#include <vector>

#include "locald/bits.hpp"
#include "locald/graph.hpp"

namespace locald {

/// A bijection on node indices 0..n-1.
struct Permutation {
  std::vector<int> mapping;

  int size() const noexcept { return static_cast<int>(mapping.size()); }
  int operator()(int v) const { return mapping[static_cast<std::size_t>(v)]; }
  bool is_bijective() const;
  bool is_fixed_point_free() const;
};

bool is_automorphism(const GraphTopology& g, const Permutation& p);

/// A fixed-point-free automorphism found by backtracking over degree- and
/// distance-profile-compatible mappings, or nothing if none exists.
std::optional<Permutation> find_fpf_automorphism(const GraphTopology& g);

/// Canonical code of the tree rooted at `root`: for each child in ascending
/// order of its own code, '1' + code(child) + '0'. Equal codes <=> isomorphic
/// rooted trees. Throws NotATree.
Bits rooted_tree_code(const GraphTopology& tree, int root);

/// The one or two centre nodes of a tree.
std::vector<int> tree_centers(const GraphTopology& tree);

/// Canonical code of an unrooted tree (minimum rooted code over its centres).
Bits tree_canonical_code(const GraphTopology& tree);

bool rooted_trees_isomorphic(const GraphTopology& t1, int r1, const GraphTopology& t2, int r2);

}  // namespace locald
