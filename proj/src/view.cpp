#include "locald/view.hpp"

#include <algorithm>
#include <queue>

namespace locald {

std::size_t RadiusView::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& a : adjacency) twice += a.size();
  return twice / 2;
}

BallShape ball_shape(const GraphTopology& g, int v, int t) {
  BallShape shape;
  std::vector<int> local(static_cast<std::size_t>(g.size()), -1);
  std::queue<int> q;
  local[static_cast<std::size_t>(v)] = 0;
  shape.members.push_back(v);
  shape.distance.push_back(0);
  q.push(v);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    const int du = shape.distance[static_cast<std::size_t>(local[static_cast<std::size_t>(u)])];
    if (du == t) continue;
    for (int w : g.neighbors(u)) {
      if (local[static_cast<std::size_t>(w)] >= 0) continue;
      local[static_cast<std::size_t>(w)] = static_cast<int>(shape.members.size());
      shape.members.push_back(w);
      shape.distance.push_back(du + 1);
      q.push(w);
    }
  }
  shape.adjacency.resize(shape.members.size());
  for (std::size_t i = 0; i < shape.members.size(); ++i) {
    const int u = shape.members[i];
    for (int w : g.neighbors(u)) {
      const int j = local[static_cast<std::size_t>(w)];
      if (j < 0) continue;
      if (shape.distance[i] == t && shape.distance[static_cast<std::size_t>(j)] == t) continue;
      shape.adjacency[i].push_back(j);
    }
    std::sort(shape.adjacency[i].begin(), shape.adjacency[i].end());
  }
  return shape;
}

RadiusView view_from_shape(const BallShape& shape, int t, const Configuration& config, const IdAssignment* ids,
                           std::span<const Bits> certs) {
  RadiusView view;
  view.radius = t;
  view.distance = shape.distance;
  view.adjacency = shape.adjacency;
  view.labels.reserve(shape.members.size());
  for (int u : shape.members) {
    NodeLabel label;
    if (ids != nullptr) label.id = (*ids)[u];
    label.input = config.input(u);
    if (!certs.empty()) label.certificate = certs[static_cast<std::size_t>(u)];
    view.labels.push_back(std::move(label));
  }
  return view;
}

RadiusView ball(const Configuration& config, const IdAssignment& ids, std::span<const Bits> certs, int v, int t) {
  return view_from_shape(ball_shape(config.topology(), v, t), t, config, &ids, certs);
}

namespace {

struct IsoSearch {
  const RadiusView& a;
  const RadiusView& b;
  bool compare_ids;
  std::vector<int> order;   // BFS order of a
  std::vector<int> parent;  // BFS parent in a, -1 for the root
  std::vector<int> map;     // a -> b
  std::vector<char> used;   // b nodes already hit

  bool compatible(int x, int y) const {
    if (a.distance[static_cast<std::size_t>(x)] != b.distance[static_cast<std::size_t>(y)]) return false;
    if (a.degree(x) != b.degree(y)) return false;
    const auto& lx = a.label(x);
    const auto& ly = b.label(y);
    if (lx.input != ly.input || lx.certificate != ly.certificate) return false;
    if (compare_ids && lx.id != ly.id) return false;
    // adjacency to already-mapped nodes must agree in both directions
    int mapped_neighbors = 0;
    for (int z : a.adjacency[static_cast<std::size_t>(x)]) {
      const int mz = map[static_cast<std::size_t>(z)];
      if (mz < 0) continue;
      ++mapped_neighbors;
      if (!std::binary_search(b.adjacency[static_cast<std::size_t>(y)].begin(),
                              b.adjacency[static_cast<std::size_t>(y)].end(), mz))
        return false;
    }
    int used_neighbors = 0;
    for (int z : b.adjacency[static_cast<std::size_t>(y)])
      if (used[static_cast<std::size_t>(z)]) ++used_neighbors;
    return used_neighbors == mapped_neighbors;
  }

  bool extend(std::size_t k) {
    if (k == order.size()) return true;
    const int x = order[k];
    const int p = parent[static_cast<std::size_t>(x)];
    auto try_candidate = [&](int y) {
      if (used[static_cast<std::size_t>(y)] || !compatible(x, y)) return false;
      map[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = 1;
      if (extend(k + 1)) return true;
      map[static_cast<std::size_t>(x)] = -1;
      used[static_cast<std::size_t>(y)] = 0;
      return false;
    };
    if (p < 0) return try_candidate(RadiusView::root);
    for (int y : b.adjacency[static_cast<std::size_t>(map[static_cast<std::size_t>(p)])])
      if (try_candidate(y)) return true;
    return false;
  }
};

}  // namespace

bool views_isomorphic(const RadiusView& a, const RadiusView& b, bool compare_ids) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  if (a.size() == 0) return true;
  IsoSearch s{a, b, compare_ids, {}, {}, {}, {}};
  const auto n = static_cast<std::size_t>(a.size());
  s.parent.assign(n, -1);
  s.map.assign(n, -1);
  s.used.assign(n, 0);
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(RadiusView::root);
  seen[0] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    s.order.push_back(u);
    for (int w : a.adjacency[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        s.parent[static_cast<std::size_t>(w)] = u;
        q.push(w);
      }
  }
  if (s.order.size() != n) return false;
  return s.extend(0);
}

}  // namespace locald
