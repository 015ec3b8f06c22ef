#include "locald/automorphism.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "locald/error.hpp"

namespace locald {

bool Permutation::is_bijective() const {
  std::vector<char> hit(mapping.size(), 0);
  for (int v : mapping) {
    if (v < 0 || v >= size() || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

bool Permutation::is_fixed_point_free() const {
  for (int v = 0; v < size(); ++v)
    if ((*this)(v) == v) return false;
  return true;
}

bool is_automorphism(const GraphTopology& g, const Permutation& p) {
  if (p.size() != g.size() || !p.is_bijective()) return false;
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p(u), p(v))) return false;
  return true;
}

namespace {

class FpfSearch {
 public:
  explicit FpfSearch(const GraphTopology& g) : g_(g) {
    const int n = g.size();
    // distance profile: how many nodes at each distance, an isomorphism invariant
    profile_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto d = bfs_distances(g, v);
      auto& prof = profile_[static_cast<std::size_t>(v)];
      for (int x : d) {
        if (static_cast<std::size_t>(x) >= prof.size()) prof.resize(static_cast<std::size_t>(x) + 1, 0);
        ++prof[static_cast<std::size_t>(x)];
      }
    }
    parent_.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      order_.push_back(u);
      for (int w : g.neighbors(u))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          parent_[static_cast<std::size_t>(w)] = u;
          q.push(w);
        }
    }
    map_.assign(static_cast<std::size_t>(n), -1);
    used_.assign(static_cast<std::size_t>(n), 0);
  }

  std::optional<Permutation> run() {
    if (extend(0)) return Permutation{map_};
    return std::nullopt;
  }

 private:
  bool compatible(int x, int y) const {
    if (x == y) return false;
    if (g_.degree(x) != g_.degree(y)) return false;
    if (profile_[static_cast<std::size_t>(x)] != profile_[static_cast<std::size_t>(y)]) return false;
    int mapped = 0;
    for (int z : g_.neighbors(x)) {
      const int mz = map_[static_cast<std::size_t>(z)];
      if (mz < 0) continue;
      ++mapped;
      if (!g_.adjacent(y, mz)) return false;
    }
    int used = 0;
    for (int z : g_.neighbors(y))
      if (used_[static_cast<std::size_t>(z)]) ++used;
    return used == mapped;
  }

  bool assign(std::size_t k, int x, int y) {
    if (used_[static_cast<std::size_t>(y)] || !compatible(x, y)) return false;
    map_[static_cast<std::size_t>(x)] = y;
    used_[static_cast<std::size_t>(y)] = 1;
    if (extend(k + 1)) return true;
    map_[static_cast<std::size_t>(x)] = -1;
    used_[static_cast<std::size_t>(y)] = 0;
    return false;
  }

  bool extend(std::size_t k) {
    if (k == order_.size()) return true;
    const int x = order_[k];
    const int p = parent_[static_cast<std::size_t>(x)];
    if (p < 0) {
      for (int y = 0; y < g_.size(); ++y)
        if (assign(k, x, y)) return true;
      return false;
    }
    for (int y : g_.neighbors(map_[static_cast<std::size_t>(p)]))
      if (assign(k, x, y)) return true;
    return false;
  }

  const GraphTopology& g_;
  std::vector<std::vector<int>> profile_;
  std::vector<int> order_;
  std::vector<int> parent_;
  std::vector<int> map_;
  std::vector<char> used_;
};

Bits subtree_code(const GraphTopology& t, int v, int parent) {
  std::vector<Bits> children;
  for (int w : t.neighbors(v))
    if (w != parent) children.push_back(subtree_code(t, w, v));
  std::sort(children.begin(), children.end());
  Bits out;
  for (auto& c : children) {
    out.push_back('1');
    out += c;
    out.push_back('0');
  }
  return out;
}

void require_tree(const GraphTopology& t) {
  if (!is_tree(t)) throw Error(ErrorCode::not_a_tree, "graph has a cycle");
}

}  // namespace

std::optional<Permutation> find_fpf_automorphism(const GraphTopology& g) {
  if (g.size() < 2) return std::nullopt;
  return FpfSearch(g).run();
}

Bits rooted_tree_code(const GraphTopology& tree, int root) {
  require_tree(tree);
  return subtree_code(tree, root, -1);
}

std::vector<int> tree_centers(const GraphTopology& tree) {
  require_tree(tree);
  const int n = tree.size();
  if (n <= 2) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    return all;
  }
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[static_cast<std::size_t>(v)] = tree.degree(v);
    if (degree[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int leaf : layer)
      for (int w : tree.neighbors(leaf))
        if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

Bits tree_canonical_code(const GraphTopology& tree) {
  Bits best;
  bool first = true;
  for (int c : tree_centers(tree)) {
    Bits code = rooted_tree_code(tree, c);
    if (first || code < best) best = std::move(code);
    first = false;
  }
  return best;
}

bool rooted_trees_isomorphic(const GraphTopology& t1, int r1, const GraphTopology& t2, int r2) {
  return t1.size() == t2.size() && rooted_tree_code(t1, r1) == rooted_tree_code(t2, r2);
}

}  // namespace locald
