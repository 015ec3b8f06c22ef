#include "locald/gadgets.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "locald/error.hpp"
#include "locald/languages.hpp"

namespace locald {

namespace {

void require_node(const GraphTopology& g, int v) {
  if (v < 0 || v >= g.size())
    throw Error(ErrorCode::index_out_of_range, "attachment node " + std::to_string(v) + " outside a graph of " +
                                                   std::to_string(g.size()) + " nodes");
}

void add_shifted(std::vector<Edge>& edges, const GraphTopology& g, int offset) {
  for (auto [u, v] : g.edges()) edges.emplace_back(u + offset, v + offset);
}

}  // namespace

std::pair<Configuration, Configuration> path_and_cycle(int t) {
  if (t < 1) throw Error(ErrorCode::invalid_input, "t must be at least 1");
  return {Configuration(path_graph(2 * t + 1)), Configuration(cycle_graph(2 * t + 2))};
}

std::vector<int> path_order(const GraphTopology& g) {
  const int n = g.size();
  if (g.edge_count() + 1 != static_cast<std::size_t>(n)) throw Error(ErrorCode::not_a_path, "edge count is not n-1");
  int start = -1;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 2) throw Error(ErrorCode::not_a_path, "node " + std::to_string(v) + " has degree above 2");
    if (start < 0 && g.degree(v) < 2) start = v;
  }
  std::vector<int> order{start};
  int prev = -1;
  while (static_cast<int>(order.size()) < n) {
    const int cur = order.back();
    int next = -1;
    for (int w : g.neighbors(cur))
      if (w != prev) next = w;
    prev = cur;
    order.push_back(next);
  }
  return order;
}

std::optional<SpliceResult> splice_cycle_from_path(const Configuration& path, const CertificateVector& certs, int t) {
  if (t < 1) throw Error(ErrorCode::invalid_input, "t must be at least 1");
  const auto order = path_order(path.topology());
  if (certs.size() != order.size())
    throw Error(ErrorCode::certificate_length_mismatch, "one certificate per path node expected");
  const int len = static_cast<int>(order.size());
  auto cert_at = [&](int pos) -> const Bits& { return certs[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])]; };
  auto input_at = [&](int pos) -> const Bits& { return path.input(order[static_cast<std::size_t>(pos)]); };
  auto same_window = [&](int p, int q) {
    for (int d = -t; d <= t; ++d)
      if (cert_at(p + d) != cert_at(q + d) || input_at(p + d) != input_at(q + d)) return false;
    return true;
  };

  for (int p = t + 1; p + t <= len - 2; ++p)
    for (int q = p + 2 * t + 1; q + t <= len - 2; ++q) {
      if (!same_window(p, q)) continue;
      const int span = q - p;
      const int size = 2 * span;
      std::vector<Edge> edges;
      std::vector<Bits> inputs;
      SpliceResult out{Configuration(GraphTopology{}), {}, {p, q}, {}};
      for (int j = 0; j < size; ++j) {
        const int pos = p + j % span;
        edges.emplace_back(j, (j + 1) % size);
        out.origin.push_back(order[static_cast<std::size_t>(pos)]);
        inputs.push_back(path.input(order[static_cast<std::size_t>(pos)]));
        out.certs.push_back(cert_at(pos));
      }
      out.graph = Configuration(build_graph(size, edges), std::move(inputs));
      return out;
    }
  return std::nullopt;
}

Configuration partition_gadget(const GraphTopology& g1, int v1, int i, const GraphTopology& g2, int v2, int j,
                               int t) {
  if (t < 1) throw Error(ErrorCode::invalid_input, "t must be at least 1");
  if ((i != 0 && i != 1) || (j != 0 && j != 1)) throw Error(ErrorCode::invalid_input, "side bits must be 0 or 1");
  require_node(g1, v1);
  require_node(g2, v2);
  const int n1 = g1.size();
  const int len = 4 * t + 4;
  const int offset2 = n1 + len;
  std::vector<Edge> edges;
  add_shifted(edges, g1, 0);
  add_shifted(edges, g2, offset2);
  edges.emplace_back(v1, partition_path_node(n1, 1));
  for (int k = 1; k < len; ++k) edges.emplace_back(partition_path_node(n1, k), partition_path_node(n1, k + 1));
  edges.emplace_back(partition_path_node(n1, len), v2 + offset2);

  std::vector<Bits> inputs;
  inputs.insert(inputs.end(), static_cast<std::size_t>(n1), i ? "1" : "0");
  for (int k = 1; k <= len; ++k) inputs.push_back(k % 2 ? "1" : "0");
  inputs.insert(inputs.end(), static_cast<std::size_t>(g2.size()), j ? "1" : "0");
  return Configuration(build_graph(offset2 + g2.size(), edges), std::move(inputs));
}

std::optional<TransplantResult> transplant_attack(const LocalVerifier& ver, const CertificateGenerator& generate,
                                                  int t, std::span<const GraphTopology> pool, const IdStrategy& ids) {
  if (t < 1) throw Error(ErrorCode::invalid_input, "t must be at least 1");
  if (ver.radius > t) throw Error(ErrorCode::invalid_input, "verifier radius exceeds t");
  const int len = 4 * t + 4;

  auto accepted = [&](const Configuration& config, const CertificateVector& certs) {
    ViewFactory views(config, ver.radius);
    for (const auto& a : generate_id_assignments(ids, config.size()))
      if (!all_accept(ver, views, a, certs)) return false;
    return true;
  };
  auto partner = [&](std::size_t a) {
    for (std::size_t b = 0; b < pool.size(); ++b)
      if (pool[b].size() == pool[a].size()) return b;
    return a;
  };
  // certificates on v_{t+2}..v_{3t+3}
  auto middle = [&](const CertificateVector& certs, int n1) {
    std::vector<Bits> key;
    for (int k = t + 2; k <= 3 * t + 3; ++k) key.push_back(certs[static_cast<std::size_t>(partition_path_node(n1, k))]);
    return key;
  };

  std::map<std::vector<Bits>, std::pair<std::size_t, CertificateVector>> left_side;
  for (std::size_t a = 0; a < pool.size(); ++a) {
    const auto g = partition_gadget(pool[a], 0, 0, pool[partner(a)], 0, 1, t);
    auto c1 = generate(g);
    if (!c1 || c1->size() != static_cast<std::size_t>(g.size()) || !accepted(g, *c1)) continue;
    auto key = middle(*c1, pool[a].size());
    left_side.try_emplace(std::move(key), a, std::move(*c1));
  }

  for (std::size_t d = 0; d < pool.size(); ++d) {
    const auto& other = pool[partner(d)];
    const auto g = partition_gadget(other, 0, 1, pool[d], 0, 0, t);
    auto c2 = generate(g);
    if (!c2 || c2->size() != static_cast<std::size_t>(g.size()) || !accepted(g, *c2)) continue;
    auto it = left_side.find(middle(*c2, other.size()));
    if (it == left_side.end()) continue;

    const auto& [a, c1] = it->second;
    const int n1 = pool[a].size();
    auto negative = partition_gadget(pool[a], 0, 0, pool[d], 0, 0, t);
    CertificateVector certs;
    for (int v = 0; v < n1; ++v) certs.push_back(c1[static_cast<std::size_t>(v)]);
    for (int k = 1; k <= len; ++k) {
      const auto& src = k <= 2 * t + 2 ? c1 : *c2;
      const int src_n1 = k <= 2 * t + 2 ? n1 : other.size();
      certs.push_back(src[static_cast<std::size_t>(partition_path_node(src_n1, k))]);
    }
    const int offset2 = other.size() + len;
    for (int v = 0; v < pool[d].size(); ++v) certs.push_back((*c2)[static_cast<std::size_t>(offset2 + v)]);

    if (member(LanguageId::eq_size_partition(), negative) || !accepted(negative, certs)) continue;
    return TransplantResult{std::move(negative), std::move(certs), static_cast<int>(a), static_cast<int>(d)};
  }
  return std::nullopt;
}

int psi(int n) { return n % 2 == 0 ? n : n - 1; }

Configuration tree_pair_gadget(const GraphTopology& t1, int v1, const GraphTopology& t2, int v2) {
  if (!is_tree(t1) || !is_tree(t2)) throw Error(ErrorCode::not_a_tree, "tree pair gadget needs two trees");
  if (t1.size() != t2.size())
    throw Error(ErrorCode::size_mismatch,
                "trees of " + std::to_string(t1.size()) + " and " + std::to_string(t2.size()) + " nodes");
  require_node(t1, v1);
  require_node(t2, v2);
  const int n = t1.size();
  const int len = psi(n);
  const int offset2 = n + len;
  std::vector<Edge> edges;
  add_shifted(edges, t1, 0);
  add_shifted(edges, t2, offset2);
  if (len == 0) {
    edges.emplace_back(v1, v2 + offset2);
  } else {
    edges.emplace_back(v1, n);
    for (int k = 1; k < len; ++k) edges.emplace_back(n + k - 1, n + k);
    edges.emplace_back(n + len - 1, v2 + offset2);
  }
  return Configuration(build_graph(offset2 + n, edges));
}

double BoundFns::k(double n) const { return (0.5 * std::log2(n) - (4.0 * t + 5.0)) / (2.0 * t) - 1.0; }

double BoundFns::s(double n) const {
  const double base = std::exp2(k(n) + 1.0);
  return (4.0 * t + 4.0) * (std::pow(base, 2.0 * t) + 1.0) * base;
}

double BoundFns::g(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_input, "g needs n >= 1");
  const double pairs = 0.5 * n * (n - 1.0);
  return pairs - std::lgamma(n + 1.0) / std::log(2.0);
}

std::uint64_t BoundFns::cayley(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_input, "cayley needs n >= 1");
  if (n <= 2) return 1;
  std::uint64_t out = 1;
  for (int e = 0; e < n - 2; ++e) {
    if (out > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n))
      throw Error(ErrorCode::invalid_input, "n^(n-2) overflows 64 bits");
    out *= static_cast<std::uint64_t>(n);
  }
  return out;
}

}  // namespace locald
