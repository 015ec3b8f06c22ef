#include "locald/certificates.hpp"

#include <algorithm>

#include "locald/automorphism.hpp"
#include "locald/error.hpp"
#include "locald/lift.hpp"

namespace locald {

TreeCode encode_tree(const GraphTopology& tree, int root) { return TreeCode{rooted_tree_code(tree, root)}; }

std::optional<GraphTopology> try_decode_tree(std::string_view bits) {
  if (!is_bit_string(bits) || bits.size() % 2 != 0) return std::nullopt;
  std::vector<Edge> edges;
  std::vector<int> stack{0};
  int next = 1;
  for (char c : bits) {
    if (c == '1') {
      edges.emplace_back(stack.back(), next);
      stack.push_back(next++);
    } else {
      if (stack.size() == 1) return std::nullopt;
      stack.pop_back();
    }
  }
  if (stack.size() != 1) return std::nullopt;
  return build_graph(next, edges);
}

GraphTopology decode_tree(const TreeCode& code) {
  auto tree = try_decode_tree(code.bits);
  if (!tree) throw Error(ErrorCode::malformed_code, "unbalanced tree code '" + code.bits + "'");
  return std::move(*tree);
}

std::vector<int> tree_preorder_ranks(const GraphTopology& tree, int root) {
  if (!is_tree(tree)) throw Error(ErrorCode::not_a_tree, "graph has a cycle");
  const auto n = static_cast<std::size_t>(tree.size());
  std::vector<int> parent(n, -1), order{root};
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int w : tree.neighbors(order[k]))
      if (w != parent[static_cast<std::size_t>(order[k])]) {
        parent[static_cast<std::size_t>(w)] = order[k];
        order.push_back(w);
      }
  // subtree codes bottom-up, children sorted by (code, index)
  std::vector<Bits> code(n);
  std::vector<std::vector<std::pair<Bits, int>>> children(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& kids = children[static_cast<std::size_t>(*it)];
    std::sort(kids.begin(), kids.end());
    for (auto& [c, w] : kids) code[static_cast<std::size_t>(*it)] += "1" + c + "0";
    if (parent[static_cast<std::size_t>(*it)] >= 0)
      children[static_cast<std::size_t>(parent[static_cast<std::size_t>(*it)])].emplace_back(code[static_cast<std::size_t>(*it)], *it);
  }
  std::vector<int> rank(n, -1);
  int next = 0;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    rank[static_cast<std::size_t>(v)] = next++;
    const auto& kids = children[static_cast<std::size_t>(v)];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(it->second);
  }
  return rank;
}

Bits encode_quotient(const Configuration& quotient, int label) {
  const int n = quotient.size();
  if (label < 0 || label >= n)
    throw Error(ErrorCode::label_out_of_range, "label " + std::to_string(label) + " for " + std::to_string(n) + " nodes");
  BitWriter out;
  out.put_length(static_cast<std::uint64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.put(quotient.topology().adjacent(i, j));
  for (const auto& w : quotient.inputs()) {
    out.put_length(w.size());
    out.put_bits(w);
  }
  out.put_uint(static_cast<std::uint64_t>(label), ceil_log2(static_cast<std::uint64_t>(n)));
  return out.take();
}

std::size_t quotient_code_length(const Configuration& quotient) {
  const auto n = static_cast<std::size_t>(quotient.size());
  std::size_t bits = length_prefix_size(n) + n * n + static_cast<std::size_t>(ceil_log2(n));
  for (const auto& w : quotient.inputs()) bits += length_prefix_size(w.size()) + w.size();
  return bits;
}

std::optional<LiftCertificate> try_decode_quotient(std::string_view bits) {
  if (!is_bit_string(bits)) return std::nullopt;
  BitReader in(bits);
  const auto n64 = in.get_length();
  if (!n64 || *n64 < 1 || *n64 > in.remaining()) return std::nullopt;
  const auto n = static_cast<int>(*n64);
  if (static_cast<std::size_t>(n) * static_cast<std::size_t>(n) > in.remaining()) return std::nullopt;
  const auto matrix = *in.get_bits(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool a = matrix[static_cast<std::size_t>(i * n + j)] == '1';
      if (a != (matrix[static_cast<std::size_t>(j * n + i)] == '1')) return std::nullopt;
      if (i == j && a) return std::nullopt;
      if (a && i < j) edges.emplace_back(i, j);
    }
  }
  std::vector<Bits> inputs;
  inputs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto len = in.get_length();
    if (!len) return std::nullopt;
    const auto w = in.get_bits(static_cast<std::size_t>(*len));
    if (!w) return std::nullopt;
    inputs.emplace_back(*w);
  }
  const auto label = in.get_uint(ceil_log2(static_cast<std::uint64_t>(n)));
  if (!label || *label >= static_cast<std::uint64_t>(n) || !in.at_end()) return std::nullopt;
  try {
    return LiftCertificate{Configuration(build_graph(n, edges), std::move(inputs)), static_cast<int>(*label)};
  } catch (const Error&) {
    return std::nullopt;  // disconnected quotient
  }
}

LiftCertificate decode_quotient(std::string_view bits) {
  auto cert = try_decode_quotient(bits);
  if (!cert) throw Error(ErrorCode::malformed_code, "not a quotient certificate");
  return std::move(*cert);
}

Bits encode_tree_certificate(const TreeCode& code, int label) {
  const int n = code.node_count();
  if (label < 0 || label >= n)
    throw Error(ErrorCode::label_out_of_range, "label " + std::to_string(label) + " for " + std::to_string(n) + " nodes");
  BitWriter out;
  out.put_length(static_cast<std::uint64_t>(n));
  out.put_bits(code.bits);
  out.put_uint(static_cast<std::uint64_t>(label), ceil_log2(static_cast<std::uint64_t>(n)));
  return out.take();
}

std::optional<LiftCertificate> try_decode_tree_certificate(std::string_view bits) {
  if (!is_bit_string(bits)) return std::nullopt;
  BitReader in(bits);
  const auto n = in.get_length();
  if (!n || *n < 1 || 2 * (*n - 1) > in.remaining()) return std::nullopt;
  const auto code_bits = *in.get_bits(static_cast<std::size_t>(2 * (*n - 1)));
  auto tree = try_decode_tree(code_bits);
  if (!tree || encode_tree(*tree, 0).bits != code_bits) return std::nullopt;
  const auto label = in.get_uint(ceil_log2(*n));
  if (!label || *label >= *n || !in.at_end()) return std::nullopt;
  return LiftCertificate{Configuration(std::move(*tree)), static_cast<int>(*label)};
}

CertificateVector make_self_lift_certificate(const Configuration& config) {
  CertificateVector out;
  out.reserve(static_cast<std::size_t>(config.size()));
  for (int v = 0; v < config.size(); ++v) out.push_back(encode_quotient(config, v));
  return out;
}

CertificateVector make_tree_lift_certificate(const GraphTopology& tree) {
  int root = -1;
  Bits best;
  for (int c : tree_centers(tree)) {
    Bits code = rooted_tree_code(tree, c);
    if (root < 0 || code < best) {
      root = c;
      best = std::move(code);
    }
  }
  const TreeCode code{best};
  const auto rank = tree_preorder_ranks(tree, root);
  CertificateVector out;
  out.reserve(static_cast<std::size_t>(tree.size()));
  for (int v = 0; v < tree.size(); ++v) out.push_back(encode_tree_certificate(code, rank[static_cast<std::size_t>(v)]));
  return out;
}

namespace {

const QuotientCatalog& small_quotients() {
  static const QuotientCatalog catalog(6, QuotientFamily::connected_graphs);
  return catalog;
}

CertificateVector balanced_quotient_certificate(const Configuration& config) {
  std::optional<CertificateVector> found;
  for_each_lift(config, small_quotients(), [&](const LiftLabeling& lab) {
    if (lab.quotient.size() >= config.size()) return false;
    if (!member(LanguageId::eq_size_partition(), lab.quotient)) return true;
    found = lift_certificate(lab);
    return false;
  });
  return found ? std::move(*found) : make_self_lift_certificate(config);
}

}  // namespace

CertificateVector make_certificate(const LanguageId& lang, const Configuration& config) {
  if (!member(lang, config))
    throw Error(ErrorCode::not_a_member, "configuration is not in " + language_name(lang));
  const auto& g = config.topology();
  switch (lang.tag) {
    case LanguageId::Tag::tree_t:
      return CertificateVector(static_cast<std::size_t>(config.size()));
    case LanguageId::Tag::tree: {
      const auto dist = bfs_distances(g, tree_centers(g).front());
      CertificateVector out;
      for (int d : dist) out.push_back(to_binary(static_cast<std::uint64_t>(d)));
      return out;
    }
    case LanguageId::Tag::fpf_symmetry_on_trees:
      return make_tree_lift_certificate(g);
    case LanguageId::Tag::eq_size_partition:
      return balanced_quotient_certificate(config);
    case LanguageId::Tag::bipartite: {
      const auto colors = *two_coloring(g);
      CertificateVector out;
      for (int c : colors) out.push_back(c ? "1" : "0");
      return out;
    }
  }
  return {};
}

}  // namespace locald
