#include "locald/runtime.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <unordered_set>

#include "locald/error.hpp"
#include "locald/io.hpp"

namespace locald {

bool Verdict::global() const noexcept {
  return std::all_of(per_node.begin(), per_node.end(), [](char a) { return a != 0; });
}

std::optional<int> Verdict::first_rejecting() const noexcept {
  for (std::size_t v = 0; v < per_node.size(); ++v)
    if (!per_node[v]) return static_cast<int>(v);
  return std::nullopt;
}

std::vector<IdAssignment> generate_id_assignments(const IdStrategy& strategy, int n) {
  auto kind = strategy.kind;
  if (kind == IdStrategy::Kind::standard)
    kind = n <= exhaustive_id_limit ? IdStrategy::Kind::all_permutations : IdStrategy::Kind::sampled;

  const auto bound = default_universe_bound(n);
  std::vector<IdAssignment> out;
  if (kind == IdStrategy::Kind::all_permutations) {
    std::vector<std::uint64_t> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 1);
    do {
      out.emplace_back(ids, bound);
    } while (std::next_permutation(ids.begin(), ids.end()));
    return out;
  }

  std::mt19937_64 rng(strategy.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n));
  std::uniform_int_distribution<std::uint64_t> pick(1, bound);
  for (int s = 0; s < strategy.samples; ++s) {
    std::vector<std::uint64_t> ids;
    std::unordered_set<std::uint64_t> taken;
    while (static_cast<int>(ids.size()) < n) {
      const auto id = pick(rng);
      if (taken.insert(id).second) ids.push_back(id);
    }
    out.emplace_back(std::move(ids), bound);
  }
  return out;
}

ViewFactory::ViewFactory(const Configuration& config, int radius) : config_(config), radius_(radius) {
  shapes_.reserve(static_cast<std::size_t>(config.size()));
  for (int v = 0; v < config.size(); ++v) shapes_.push_back(ball_shape(config.topology(), v, radius));
}

RadiusView ViewFactory::view(int v, const IdAssignment& ids, std::span<const Bits> certs) const {
  return view_from_shape(shape(v), radius_, config_, &ids, certs);
}

std::vector<RadiusView> flood_views(const Configuration& config, const IdAssignment& ids,
                                    std::span<const Bits> certs, int t) {
  using IdEdge = std::pair<std::uint64_t, std::uint64_t>;
  struct Knowledge {
    std::map<std::uint64_t, NodeLabel> nodes;
    std::set<IdEdge> edges;
  };
  const auto& g = config.topology();
  const auto n = static_cast<std::size_t>(g.size());

  std::vector<Knowledge> know(n);
  for (int v = 0; v < g.size(); ++v) {
    NodeLabel own{ids[v], config.input(v), certs.empty() ? Bits{} : certs[static_cast<std::size_t>(v)]};
    know[static_cast<std::size_t>(v)].nodes.emplace(ids[v], std::move(own));
  }
  for (int round = 0; round < t; ++round) {
    std::vector<Knowledge> next = know;
    for (int v = 0; v < g.size(); ++v) {
      auto& mine = next[static_cast<std::size_t>(v)];
      for (int u : g.neighbors(v)) {
        const auto& msg = know[static_cast<std::size_t>(u)];
        mine.nodes.insert(msg.nodes.begin(), msg.nodes.end());
        mine.edges.insert(msg.edges.begin(), msg.edges.end());
        mine.edges.insert(std::minmax(ids[u], ids[v]));
      }
    }
    know = std::move(next);
  }

  std::vector<RadiusView> views;
  views.reserve(n);
  for (int v = 0; v < g.size(); ++v) {
    const auto& k = know[static_cast<std::size_t>(v)];
    std::map<std::uint64_t, std::vector<std::uint64_t>> adj;
    for (auto [a, b] : k.edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    // BFS over learned edges fixes distances and the local order
    std::map<std::uint64_t, int> local;
    RadiusView view;
    view.radius = t;
    std::queue<std::uint64_t> q;
    local[ids[v]] = 0;
    view.distance.push_back(0);
    view.labels.push_back(k.nodes.at(ids[v]));
    q.push(ids[v]);
    while (!q.empty()) {
      const auto a = q.front();
      q.pop();
      auto nb = adj[a];
      std::sort(nb.begin(), nb.end());
      for (auto b : nb) {
        if (local.contains(b)) continue;
        local[b] = view.size();
        view.distance.push_back(view.distance[static_cast<std::size_t>(local[a])] + 1);
        view.labels.push_back(k.nodes.at(b));
        q.push(b);
      }
    }
    view.adjacency.resize(view.distance.size());
    for (auto [a, b] : k.edges) {
      view.adjacency[static_cast<std::size_t>(local.at(a))].push_back(local.at(b));
      view.adjacency[static_cast<std::size_t>(local.at(b))].push_back(local.at(a));
    }
    for (auto& a : view.adjacency) std::sort(a.begin(), a.end());
    views.push_back(std::move(view));
  }
  return views;
}

Verdict run_decider(const LocalAlgorithm& alg, const Configuration& config, const IdAssignment& ids) {
  ViewFactory views(config, alg.radius);
  Verdict verdict;
  verdict.per_node.resize(static_cast<std::size_t>(config.size()));
  for (int v = 0; v < config.size(); ++v) verdict.per_node[static_cast<std::size_t>(v)] = alg.decide(views.view(v, ids, {}));
  return verdict;
}

namespace {

void require_cert_length(const Configuration& config, std::span<const Bits> certs) {
  if (certs.size() != static_cast<std::size_t>(config.size()))
    throw Error(ErrorCode::certificate_length_mismatch, "expected " + std::to_string(config.size()) +
                                                            " certificates, got " + std::to_string(certs.size()));
}

std::optional<int> rejecting_node(const LocalVerifier& ver, const ViewFactory& views, const IdAssignment& ids,
                                  std::span<const Bits> certs) {
  for (int v = 0; v < views.config().size(); ++v)
    if (!ver.decide(views.view(v, ids, certs))) return v;
  return std::nullopt;
}

}  // namespace

Verdict run_verifier(const LocalVerifier& ver, const Configuration& config, const IdAssignment& ids,
                     std::span<const Bits> certs) {
  require_cert_length(config, certs);
  ViewFactory views(config, ver.radius);
  Verdict verdict;
  verdict.per_node.resize(static_cast<std::size_t>(config.size()));
  for (int v = 0; v < config.size(); ++v) verdict.per_node[static_cast<std::size_t>(v)] = ver.decide(views.view(v, ids, certs));
  return verdict;
}

bool all_accept(const LocalVerifier& ver, const ViewFactory& views, const IdAssignment& ids,
                std::span<const Bits> certs) {
  require_cert_length(views.config(), certs);
  return !rejecting_node(ver, views, ids, certs).has_value();
}

ComplianceReport check_decides(const LocalAlgorithm& alg, const LanguageId& lang,
                               std::span<const Configuration> instances, const IdStrategy& strategy) {
  ComplianceReport report;
  for (const auto& config : instances) {
    ++report.instances_checked;
    const bool expected = member(lang, config);
    ViewFactory views(config, alg.radius);
    for (const auto& ids : generate_id_assignments(strategy, config.size())) {
      std::optional<int> rejecting;
      for (int v = 0; v < config.size() && !rejecting; ++v)
        if (!alg.decide(views.view(v, ids, {}))) rejecting = v;
      const bool accepted = !rejecting;
      if (accepted == expected) continue;
      Witness w{expected ? Witness::Kind::false_reject : Witness::Kind::false_accept, config, ids, std::nullopt,
                rejecting};
      if (expected) report.completeness_witness = std::move(w);
      else report.soundness_witness = std::move(w);
      return report;
    }
  }
  return report;
}

ComplianceReport check_verifies(const LocalVerifier& ver, const LanguageId& lang,
                                std::span<const Configuration> instances, const CertificateGenerator& generate,
                                const CertificateSpace& space, const IdStrategy& strategy) {
  ComplianceReport report;
  for (const auto& config : instances) {
    ++report.instances_checked;
    const auto assignments = generate_id_assignments(strategy, config.size());
    ViewFactory views(config, ver.radius);
    if (member(lang, config)) {
      auto certs = generate(config);
      ++report.certificates_checked;
      if (!certs || certs->size() != static_cast<std::size_t>(config.size())) {
        report.completeness_witness = Witness{Witness::Kind::completeness, config, assignments.front(), certs, std::nullopt};
        return report;
      }
      for (const auto& ids : assignments) {
        if (auto bad = rejecting_node(ver, views, ids, *certs)) {
          report.completeness_witness = Witness{Witness::Kind::completeness, config, ids, certs, bad};
          return report;
        }
      }
      continue;
    }
    std::optional<Witness> found;
    space(config, [&](const CertificateVector& certs) {
      ++report.certificates_checked;
      if (certs.size() != static_cast<std::size_t>(config.size())) return true;
      for (const auto& ids : assignments) {
        if (!rejecting_node(ver, views, ids, certs)) {
          found = Witness{Witness::Kind::soundness, config, ids, certs, std::nullopt};
          return false;
        }
      }
      return true;
    });
    if (found) {
      report.soundness_witness = std::move(found);
      return report;
    }
  }
  return report;
}

const char* to_string(Witness::Kind kind) noexcept {
  switch (kind) {
    case Witness::Kind::false_reject: return "false_reject";
    case Witness::Kind::false_accept: return "false_accept";
    case Witness::Kind::completeness: return "completeness";
    case Witness::Kind::soundness: return "soundness";
  }
  return "?";
}

nlohmann::json to_json(const ComplianceReport& report) {
  nlohmann::json doc = {{"passed", report.passed()},
                        {"instancesChecked", report.instances_checked},
                        {"certificatesChecked", report.certificates_checked}};
  const auto& w = report.completeness_witness ? report.completeness_witness : report.soundness_witness;
  if (!w) {
    doc["witness"] = nullptr;
    return doc;
  }
  doc["witness"] = {{"kind", to_string(w->kind)},
                    {"config", to_json(w->config)},
                    {"ids", w->ids.ids()},
                    {"certs", w->certs ? to_json(*w->certs) : nlohmann::json(nullptr)},
                    {"failingNode", w->failing_node ? nlohmann::json(*w->failing_node) : nlohmann::json(nullptr)}};
  return doc;
}

}  // namespace locald
