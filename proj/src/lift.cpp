#include "locald/lift.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "locald/enumerate.hpp"
#include "locald/error.hpp"

namespace locald {

bool local_lift_check(const RadiusView& view, const Configuration& quotient, std::span<const int> labels, int t) {
  const int qn = quotient.size();
  for (int u = 0; u < view.size(); ++u) {
    const int q = labels[static_cast<std::size_t>(u)];
    if (q < 0 || q >= qn) return false;
    if (view.label(u).input != quotient.input(q)) return false;
  }
  std::vector<int> seen;
  for (int u = 0; u < view.size(); ++u) {
    if (view.distance[static_cast<std::size_t>(u)] >= t) continue;
    const int q = labels[static_cast<std::size_t>(u)];
    const auto expected = quotient.topology().neighbors(q);
    if (static_cast<std::size_t>(view.degree(u)) != expected.size()) return false;
    seen.clear();
    for (int x : view.adjacency[static_cast<std::size_t>(u)]) seen.push_back(labels[static_cast<std::size_t>(x)]);
    std::sort(seen.begin(), seen.end());
    if (!std::equal(seen.begin(), seen.end(), expected.begin(), expected.end())) return false;
  }
  return true;
}

namespace {

void require_labels(const Configuration& config, const LiftLabeling& lab) {
  if (lab.lambda.size() != static_cast<std::size_t>(config.size()))
    throw Error(ErrorCode::invalid_input, "labelling has " + std::to_string(lab.lambda.size()) + " entries for " +
                                              std::to_string(config.size()) + " nodes");
  for (int q : lab.lambda)
    if (q < 0 || q >= lab.quotient.size())
      throw Error(ErrorCode::label_out_of_range,
                  "label " + std::to_string(q) + " for a quotient of " + std::to_string(lab.quotient.size()) + " nodes");
}

void require_accepted(const Configuration& config, const LiftLabeling& lab) {
  if (!check_lift(config, lab, 1).global())
    throw Error(ErrorCode::lift_check_failed, "labelling is not an accepted lift");
}

}  // namespace

Verdict check_lift(const Configuration& config, const LiftLabeling& lab, int t) {
  if (t < 1) throw Error(ErrorCode::invalid_input, "lift radius must be at least 1");
  require_labels(config, lab);
  Verdict verdict;
  verdict.per_node.resize(static_cast<std::size_t>(config.size()));
  std::vector<int> labels;
  for (int v = 0; v < config.size(); ++v) {
    const auto shape = ball_shape(config.topology(), v, t);
    const auto view = view_from_shape(shape, t, config, nullptr, {});
    labels.clear();
    for (int u : shape.members) labels.push_back(lab.lambda[static_cast<std::size_t>(u)]);
    verdict.per_node[static_cast<std::size_t>(v)] = local_lift_check(view, lab.quotient, labels, t);
  }
  return verdict;
}

FiberStats fiber_stats(const Configuration& config, const LiftLabeling& lab) {
  require_accepted(config, lab);
  FiberStats stats;
  stats.fiber_sizes.assign(static_cast<std::size_t>(lab.quotient.size()), 0);
  stats.degrees_constant = true;
  stats.inputs_constant = true;
  for (int v = 0; v < config.size(); ++v) {
    const int q = lab.lambda[static_cast<std::size_t>(v)];
    ++stats.fiber_sizes[static_cast<std::size_t>(q)];
    if (config.topology().degree(v) != lab.quotient.topology().degree(q)) stats.degrees_constant = false;
    if (config.input(v) != lab.quotient.input(q)) stats.inputs_constant = false;
  }
  const int first = stats.fiber_sizes.front();
  const bool equal = std::all_of(stats.fiber_sizes.begin(), stats.fiber_sizes.end(), [&](int s) { return s == first; });
  stats.multiplicity = equal ? first : 0;
  return stats;
}

std::vector<std::vector<int>> quotient_partition(const Configuration& config, const LiftLabeling& lab, int i) {
  require_labels(config, lab);
  if (i < 0 || i >= lab.quotient.size())
    throw Error(ErrorCode::label_out_of_range, "quotient node " + std::to_string(i));
  require_accepted(config, lab);

  const auto& q = lab.quotient.topology();
  const auto& g = config.topology();
  // BFS tree of the quotient from i; sorted adjacency makes each parent the
  // end of the lexicographically smallest shortest path
  std::vector<int> parent(static_cast<std::size_t>(q.size()), -1), order{i};
  std::vector<char> seen(static_cast<std::size_t>(q.size()), 0);
  seen[static_cast<std::size_t>(i)] = 1;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int w : q.neighbors(order[k]))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        parent[static_cast<std::size_t>(w)] = order[k];
        order.push_back(w);
      }

  std::vector<int> fiber;
  for (int v = 0; v < config.size(); ++v)
    if (lab.lambda[static_cast<std::size_t>(v)] == i) fiber.push_back(v);

  std::vector<std::vector<int>> sets;
  std::vector<char> taken(static_cast<std::size_t>(config.size()), 0);
  for (int start : fiber) {
    std::vector<int> rep(static_cast<std::size_t>(q.size()), -1);
    rep[static_cast<std::size_t>(i)] = start;
    for (std::size_t k = 1; k < order.size(); ++k) {
      const int label = order[k];
      const int x = rep[static_cast<std::size_t>(parent[static_cast<std::size_t>(label)])];
      for (int y : g.neighbors(x))
        if (lab.lambda[static_cast<std::size_t>(y)] == label) rep[static_cast<std::size_t>(label)] = y;
    }
    for (int v : rep) {
      if (taken[static_cast<std::size_t>(v)]) throw Error(ErrorCode::lift_check_failed, "partition sets overlap");
      taken[static_cast<std::size_t>(v)] = 1;
    }
    std::sort(rep.begin(), rep.end());
    sets.push_back(std::move(rep));
  }
  return sets;
}

LocalVerifier lift_verifier(std::string name, const LanguageId& lang, int t, LiftDecoder decode) {
  return LocalVerifier{std::move(name), t, [lang, t, decode = std::move(decode)](const RadiusView& view) {
                         std::vector<int> labels(static_cast<std::size_t>(view.size()));
                         std::optional<Configuration> quotient;
                         for (int u = 0; u < view.size(); ++u) {
                           auto cert = decode(view.label(u).certificate);
                           if (!cert) return false;
                           if (!quotient) quotient = std::move(cert->quotient);
                           else if (cert->quotient != *quotient) return false;
                           labels[static_cast<std::size_t>(u)] = cert->label;
                         }
                         return local_lift_check(view, *quotient, labels, t) && member(lang, *quotient);
                       }};
}

LocalVerifier universal_lift_verifier(const LanguageId& lang, int t) {
  return lift_verifier("verifier:lift:" + language_name(lang), lang, t,
                       [](std::string_view bits) { return try_decode_quotient(bits); });
}

CertificateVector lift_certificate(const LiftLabeling& lab) {
  CertificateVector out;
  out.reserve(lab.lambda.size());
  for (int q : lab.lambda) out.push_back(encode_quotient(lab.quotient, q));
  return out;
}

namespace {

class LabelingSearch {
 public:
  LabelingSearch(const Configuration& config, const Configuration& quotient,
                 const std::function<bool(const std::vector<int>&)>& visit)
      : g_(config.topology()), config_(config), quotient_(quotient), visit_(visit) {
    const auto n = static_cast<std::size_t>(g_.size());
    parent_.assign(n, -1);
    std::vector<char> seen(n, 0);
    order_.push_back(0);
    seen[0] = 1;
    for (std::size_t k = 0; k < order_.size(); ++k)
      for (int w : g_.neighbors(order_[k]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          parent_[static_cast<std::size_t>(w)] = order_[k];
          order_.push_back(w);
        }
    lambda_.assign(n, -1);
  }

  void run() { extend(0); }

 private:
  bool consistent(int x, int c) const {
    const auto& q = quotient_.topology();
    if (g_.degree(x) != q.degree(c) || config_.input(x) != quotient_.input(c)) return false;
    for (int z : g_.neighbors(x)) {
      const int lz = lambda_[static_cast<std::size_t>(z)];
      if (lz < 0) continue;
      if (!q.adjacent(c, lz)) return false;
      // c must be fresh among z's labelled neighbours
      for (int y : g_.neighbors(z))
        if (y != x && lambda_[static_cast<std::size_t>(y)] == c) return false;
    }
    return true;
  }

  // returns false once the visitor asked to stop
  bool extend(std::size_t k) {
    if (k == order_.size()) return visit_(lambda_);
    const int x = order_[k];
    const int p = parent_[static_cast<std::size_t>(x)];
    auto attempt = [&](int c) {
      if (!consistent(x, c)) return true;
      lambda_[static_cast<std::size_t>(x)] = c;
      const bool go_on = extend(k + 1);
      lambda_[static_cast<std::size_t>(x)] = -1;
      return go_on;
    };
    if (p < 0) {
      for (int c = 0; c < quotient_.size(); ++c)
        if (!attempt(c)) return false;
      return true;
    }
    for (int c : quotient_.topology().neighbors(lambda_[static_cast<std::size_t>(p)]))
      if (!attempt(c)) return false;
    return true;
  }

  const GraphTopology& g_;
  const Configuration& config_;
  const Configuration& quotient_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  std::vector<int> order_;
  std::vector<int> parent_;
  std::vector<int> lambda_;
};

std::vector<int> sorted_degrees(const GraphTopology& g) {
  std::vector<int> d;
  for (int v = 0; v < g.size(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

void enumerate_lift_labelings(const Configuration& config, const Configuration& quotient,
                              const std::function<bool(const std::vector<int>&)>& visit) {
  LabelingSearch(config, quotient, visit).run();
}

QuotientCatalog::QuotientCatalog(int max_size, QuotientFamily family)
    : max_size_(max_size), family_(family), graphs_(static_cast<std::size_t>(max_size) + 1) {
  const int cap = std::max(max_size, default_enumeration_cap);
  for (int n = 1; n <= max_size; ++n) {
    if (family == QuotientFamily::connected_graphs) {
      graphs_[static_cast<std::size_t>(n)] = enumerate_instances(InstanceKind::connected_graphs, n, cap);
      continue;
    }
    // trees are kept in the numbering their tree code decodes to, so a label
    // is the node's preorder rank
    for (const auto& t : enumerate_instances(InstanceKind::trees, n, cap))
      graphs_[static_cast<std::size_t>(n)].push_back(decode_tree(encode_tree(t, 0)));
  }
}

void for_each_lift(const Configuration& config, const QuotientCatalog& catalog,
                   const std::function<bool(const LiftLabeling&)>& visit) {
  const int n = config.size();
  const auto degrees = sorted_degrees(config.topology());
  std::map<Bits, int> counts;
  for (const auto& w : config.inputs()) ++counts[w];
  std::vector<Bits> alphabet;
  for (const auto& [w, c] : counts) alphabet.push_back(w);
  if (catalog.family() == QuotientFamily::trees && alphabet != std::vector<Bits>{Bits{}}) return;

  bool stop = false;
  for (int size = 1; size <= std::min(n, catalog.max_size()) && !stop; ++size) {
    if (n % size != 0) continue;
    const int l = n / size;
    for (const auto& candidate : catalog.of_size(size)) {
      if (stop) break;
      if (candidate.edge_count() * static_cast<std::size_t>(l) != config.topology().edge_count()) continue;
      std::vector<int> scaled;
      for (int d : sorted_degrees(candidate)) scaled.insert(scaled.end(), static_cast<std::size_t>(l), d);
      if (scaled != degrees) continue;

      std::vector<std::size_t> digits(static_cast<std::size_t>(size), 0);
      while (!stop) {
        std::vector<Bits> inputs(static_cast<std::size_t>(size));
        std::map<Bits, int> qcounts;
        for (std::size_t k = 0; k < digits.size(); ++k) {
          inputs[k] = alphabet[digits[k]];
          ++qcounts[inputs[k]];
        }
        bool scales = true;
        for (const auto& [w, c] : counts) {
          auto it = qcounts.find(w);
          if (it == qcounts.end() || it->second * l != c) scales = false;
        }
        if (scales) {
          LiftLabeling lab{Configuration(candidate, std::move(inputs)), {}};
          enumerate_lift_labelings(config, lab.quotient, [&](const std::vector<int>& lambda) {
            lab.lambda = lambda;
            if (!visit(lab)) stop = true;
            return !stop;
          });
        }
        std::size_t k = digits.size();
        while (k > 0 && ++digits[k - 1] == alphabet.size()) digits[--k] = 0;
        if (k == 0) break;
      }
    }
  }
}

std::optional<std::pair<Configuration, LiftLabeling>> random_cover(const Configuration& base, int l,
                                                                   std::mt19937_64& rng, int attempts) {
  if (l < 1) throw Error(ErrorCode::invalid_input, "cover multiplicity must be positive");
  const int qn = base.size();
  const int n = qn * l;
  const auto base_edges = base.topology().edges();
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<int> place(static_cast<std::size_t>(n));
    std::iota(place.begin(), place.end(), 0);
    std::shuffle(place.begin(), place.end(), rng);
    auto node = [&](int i, int a) { return place[static_cast<std::size_t>(i * l + a)]; };

    std::vector<Edge> edges;
    std::vector<int> matching(static_cast<std::size_t>(l));
    for (auto [i, j] : base_edges) {
      std::iota(matching.begin(), matching.end(), 0);
      std::shuffle(matching.begin(), matching.end(), rng);
      for (int a = 0; a < l; ++a) edges.emplace_back(node(i, a), node(j, matching[static_cast<std::size_t>(a)]));
    }
    std::vector<int> root(static_cast<std::size_t>(n));
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      return x;
    };
    int components = n;
    for (auto [u, v] : edges) {
      const int a = find(u), b = find(v);
      if (a != b) {
        root[static_cast<std::size_t>(a)] = b;
        --components;
      }
    }
    if (components != 1) continue;

    std::vector<Bits> inputs(static_cast<std::size_t>(n));
    std::vector<int> lambda(static_cast<std::size_t>(n));
    for (int i = 0; i < qn; ++i)
      for (int a = 0; a < l; ++a) {
        inputs[static_cast<std::size_t>(node(i, a))] = base.input(i);
        lambda[static_cast<std::size_t>(node(i, a))] = i;
      }
    Configuration cover(build_graph(n, edges), std::move(inputs));
    return std::pair{std::move(cover), LiftLabeling{base, std::move(lambda)}};
  }
  return std::nullopt;
}

}  // namespace locald
