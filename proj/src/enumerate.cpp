#include "locald/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>

#include "locald/automorphism.hpp"
#include "locald/error.hpp"

namespace locald {

namespace {

// Branch and bound for the minimum adjacency string. Position k is filled by
// an unused vertex; the bits of column k (pairs (j,k), j<k) are then fixed and
// form the next slice of the string, so partial strings compare as prefixes.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const GraphTopology& g) : g_(g), n_(g.size()) {
    placed_.reserve(static_cast<std::size_t>(n_));
    used_.assign(static_cast<std::size_t>(n_), 0);
  }

  void run() {
    best_.clear();
    extend(0);
  }

  const Bits& best() const { return best_; }
  const std::vector<int>& best_order() const { return best_order_; }

 private:
  void extend(int k) {
    if (k == n_) {
      if (best_.empty() || current_ < best_) {
        best_ = current_;
        best_order_ = placed_;
      }
      return;
    }
    // try candidates in order of their column string to reach small leaves first
    std::vector<std::pair<Bits, int>> candidates;
    for (int v = 0; v < n_; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      Bits column;
      column.reserve(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j) column.push_back(g_.adjacent(placed_[static_cast<std::size_t>(j)], v) ? '1' : '0');
      candidates.emplace_back(std::move(column), v);
    }
    std::sort(candidates.begin(), candidates.end());
    const std::size_t offset = static_cast<std::size_t>(k) * static_cast<std::size_t>(k - 1) / 2;
    for (auto& [column, v] : candidates) {
      current_ += column;
      if (!best_.empty() && std::string_view(current_) > std::string_view(best_).substr(0, current_.size())) {
        current_.resize(offset);
        continue;
      }
      placed_.push_back(v);
      used_[static_cast<std::size_t>(v)] = 1;
      extend(k + 1);
      current_.resize(offset);
      used_[static_cast<std::size_t>(v)] = 0;
      placed_.pop_back();
    }
  }

  const GraphTopology& g_;
  int n_;
  std::vector<int> placed_;
  std::vector<char> used_;
  Bits current_;
  Bits best_;
  std::vector<int> best_order_;
};

GraphTopology canonical_relabel(const GraphTopology& g) { return relabel(g, canonical_labeling(g)); }

std::vector<GraphTopology> extend_connected(const std::vector<GraphTopology>& smaller, int n) {
  // every connected graph has a vertex whose removal leaves it connected, so
  // attaching a new vertex to every non-empty subset of every smaller class
  // reaches all classes
  std::map<Bits, GraphTopology> classes;
  for (const auto& h : smaller) {
    auto base = h.edges();
    const int m = n - 1;
    for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
      auto e = base;
      for (int v = 0; v < m; ++v)
        if (mask & (1U << v)) e.emplace_back(v, m);
      auto g = build_graph(n, e);
      auto code = canonical_form(g);
      if (!classes.contains(code)) classes.emplace(std::move(code), canonical_relabel(g));
    }
  }
  std::vector<GraphTopology> out;
  out.reserve(classes.size());
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

std::vector<GraphTopology> connected_classes(int n) {
  std::vector<GraphTopology> level{GraphTopology{}};
  for (int k = 2; k <= n; ++k) level = extend_connected(level, k);
  return level;
}

std::vector<GraphTopology> tree_classes(int n) {
  std::vector<GraphTopology> level{GraphTopology{}};
  for (int k = 2; k <= n; ++k) {
    std::map<Bits, GraphTopology> classes;
    for (const auto& t : level) {
      for (int v = 0; v < k - 1; ++v) {
        auto e = t.edges();
        e.emplace_back(v, k - 1);
        auto g = build_graph(k, e);
        auto code = tree_canonical_code(g);
        if (!classes.contains(code)) classes.emplace(std::move(code), std::move(g));
      }
    }
    level.clear();
    for (auto& [code, g] : classes) level.push_back(std::move(g));
  }
  // representatives in canonical labelling, ordered by canonical form
  std::map<Bits, GraphTopology> ordered;
  for (auto& t : level) {
    auto c = canonical_labeling(t);
    ordered.emplace(canonical_form(t), relabel(t, c));
  }
  std::vector<GraphTopology> out;
  for (auto& [code, g] : ordered) out.push_back(std::move(g));
  return out;
}

std::vector<GraphTopology> labeled_trees(int n) {
  if (n == 1) return {GraphTopology{}};
  std::vector<GraphTopology> out;
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    out.push_back(prufer_decode(seq));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

}  // namespace

Bits canonical_form(const GraphTopology& g) {
  CanonicalSearch s(g);
  s.run();
  return s.best();
}

std::vector<int> canonical_labeling(const GraphTopology& g) {
  CanonicalSearch s(g);
  s.run();
  std::vector<int> perm(static_cast<std::size_t>(g.size()));
  const auto& order = s.best_order();
  for (std::size_t pos = 0; pos < order.size(); ++pos) perm[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
  return perm;
}

bool graphs_isomorphic(const GraphTopology& a, const GraphTopology& b) {
  return a.size() == b.size() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
}

std::vector<GraphTopology> enumerate_instances(InstanceKind kind, int n, int cap) {
  if (n < 1) throw Error(ErrorCode::invalid_input, "n must be positive");
  if (n > cap) throw Error(ErrorCode::cap_exceeded, "n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  switch (kind) {
    case InstanceKind::connected_graphs: return connected_classes(n);
    case InstanceKind::trees: return tree_classes(n);
    case InstanceKind::labeled_trees: return labeled_trees(n);
  }
  return {};
}

GraphTopology prufer_decode(std::span<const int> sequence) {
  const int n = static_cast<int>(sequence.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : sequence) {
    if (x < 0 || x >= n) throw Error(ErrorCode::index_out_of_range, "Pruefer entry " + std::to_string(x));
    ++degree[static_cast<std::size_t>(x)];
  }
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  std::vector<Edge> e;
  for (int x : sequence) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    e.emplace_back(leaf, x);
    if (--degree[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
  }
  e.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
  return build_graph(n, e);
}

GraphTopology random_tree(int n, std::mt19937_64& rng) {
  if (n == 1) return GraphTopology{};
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (auto& x : seq) x = pick(rng);
  return prufer_decode(seq);
}

}  // namespace locald
