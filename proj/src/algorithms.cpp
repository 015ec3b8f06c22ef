#include "locald/algorithms.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "locald/automorphism.hpp"
#include "locald/certificates.hpp"
#include "locald/error.hpp"
#include "locald/lift.hpp"

namespace locald {

namespace {

bool inputs_empty(const RadiusView& view) {
  return std::all_of(view.labels.begin(), view.labels.end(), [](const NodeLabel& l) { return l.input.empty(); });
}

int view_eccentricity(const RadiusView& view, int from) {
  std::vector<int> dist(static_cast<std::size_t>(view.size()), -1);
  std::vector<int> queue{from};
  dist[static_cast<std::size_t>(from)] = 0;
  int far = 0;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const int u = queue[k];
    far = std::max(far, dist[static_cast<std::size_t>(u)]);
    for (int w : view.adjacency[static_cast<std::size_t>(u)])
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
  }
  return far;
}

std::optional<std::uint64_t> distance_value(const Bits& cert) {
  if (cert.empty() || cert.size() > 63 || !is_bit_string(cert)) return std::nullopt;
  return parse_binary(cert);
}

bool parse_int(std::string_view text, int& out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

int first_center(const GraphTopology& tree) { return tree_centers(tree).front(); }

}  // namespace

LocalAlgorithm tree_t_decider(int t) {
  if (t < 1) throw Error(ErrorCode::invalid_input, "tree_t decider needs t >= 1");
  return LocalAlgorithm{"decider:tree_t:" + std::to_string(t), t + 1, [t](const RadiusView& view) {
                          if (!inputs_empty(view)) return false;
                          if (view.edge_count() + 1 != static_cast<std::size_t>(view.size())) return false;
                          for (int u = 0; u < view.size(); ++u)
                            if (view_eccentricity(view, u) > 2 * t) return false;
                          return true;
                        }};
}

LocalVerifier tree_verifier() {
  return LocalVerifier{"verifier:tree", 1, [](const RadiusView& view) {
                         if (!view.label(RadiusView::root).input.empty()) return false;
                         const auto own = distance_value(view.label(RadiusView::root).certificate);
                         if (!own) return false;
                         int parents = 0;
                         for (int u : view.adjacency[RadiusView::root]) {
                           const auto d = distance_value(view.label(u).certificate);
                           if (!d) return false;
                           if (*own > 0 && *d + 1 == *own) ++parents;
                           else if (*d != *own + 1) return false;
                         }
                         return *own == 0 || parents == 1;
                       }};
}

LocalVerifier fpf_trees_verifier() {
  return lift_verifier("verifier:fpf", LanguageId::fpf_symmetry_on_trees(), 1,
                       [](std::string_view bits) { return try_decode_tree_certificate(bits); });
}

LocalVerifier eqsize_verifier() {
  auto v = universal_lift_verifier(LanguageId::eq_size_partition(), 1);
  v.name = "verifier:eqsize";
  return v;
}

LocalVerifier bipartite_verifier() {
  return LocalVerifier{"verifier:bipartite", 1, [](const RadiusView& view) {
                         const auto& own = view.label(RadiusView::root).certificate;
                         if (own != "0" && own != "1") return false;
                         for (int u : view.adjacency[RadiusView::root]) {
                           const auto& c = view.label(u).certificate;
                           if (c.size() != 1 || c == own) return false;
                         }
                         return true;
                       }};
}

LocalAlgorithm always_accept_decider() {
  return LocalAlgorithm{"decider:always-accept", 0, [](const RadiusView&) { return true; }};
}

LocalVerifier always_accept_verifier() {
  return LocalVerifier{"verifier:always-accept", 0, [](const RadiusView&) { return true; }};
}

LocalVerifier strawman_tree_verifier(int k, int t) {
  if (k < 0 || k > 62 || t < 1) throw Error(ErrorCode::invalid_input, "strawman needs 0 <= k <= 62 and t >= 1");
  return LocalVerifier{"verifier:strawman-tree:" + std::to_string(k), t, [k](const RadiusView& view) {
                         if (!inputs_empty(view)) return false;
                         const auto& own = view.label(RadiusView::root).certificate;
                         if (own.size() != static_cast<std::size_t>(k) || !is_bit_string(own)) return false;
                         if (view.edge_count() + 1 != static_cast<std::size_t>(view.size())) return false;
                         if (k == 0) return true;
                         for (int u : view.adjacency[RadiusView::root])
                           if (view.label(u).certificate == own) return false;
                         return true;
                       }};
}

CertificateGenerator strawman_tree_certificates(int k) {
  return [k](const Configuration& config) -> std::optional<CertificateVector> {
    if (!member(LanguageId::tree(), config)) return std::nullopt;
    const auto dist = bfs_distances(config.topology(), first_center(config.topology()));
    CertificateVector out;
    const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    for (int d : dist) out.push_back(k == 0 ? Bits{} : to_binary(static_cast<std::uint64_t>(d) & mask, k));
    return out;
  };
}

LocalVerifier strawman_eqsize_verifier() {
  return LocalVerifier{"verifier:strawman-eqsize", 1, [](const RadiusView& view) {
                         const auto& own = view.label(RadiusView::root).certificate;
                         if (own != "00") return false;
                         for (int u : view.adjacency[RadiusView::root])
                           if (view.label(u).certificate != own) return false;
                         return true;
                       }};
}

CertificateGenerator strawman_eqsize_certificates() {
  return [](const Configuration& config) -> std::optional<CertificateVector> {
    int balance = 0;
    for (const auto& w : config.inputs()) {
      if (w == "0") ++balance;
      else if (w == "1") --balance;
      else return std::nullopt;
    }
    const auto value = static_cast<std::uint64_t>(((balance % 4) + 4) % 4);
    return CertificateVector(static_cast<std::size_t>(config.size()), to_binary(value, 2));
  };
}

const std::vector<VerifierEntry>& verifier_catalog() {
  static const std::vector<VerifierEntry> catalog = [] {
    auto honest = [](LanguageId lang) {
      return CertificateGenerator([lang](const Configuration& c) -> std::optional<CertificateVector> {
        if (!member(lang, c)) return std::nullopt;
        return make_certificate(lang, c);
      });
    };
    std::vector<VerifierEntry> out;
    out.push_back({"verifier:tree", LanguageId::tree(), tree_verifier(), honest(LanguageId::tree())});
    out.push_back({"verifier:fpf", LanguageId::fpf_symmetry_on_trees(), fpf_trees_verifier(),
                   honest(LanguageId::fpf_symmetry_on_trees())});
    out.push_back(
        {"verifier:eqsize", LanguageId::eq_size_partition(), eqsize_verifier(), honest(LanguageId::eq_size_partition())});
    out.push_back({"verifier:bipartite", LanguageId::bipartite(), bipartite_verifier(), honest(LanguageId::bipartite())});
    return out;
  }();
  return catalog;
}

std::optional<LocalAlgorithm> find_decider(std::string_view name) {
  if (name == "decider:always-accept") return always_accept_decider();
  constexpr std::string_view prefix = "decider:tree_t:";
  int t = 0;
  if (name.starts_with(prefix) && parse_int(name.substr(prefix.size()), t) && t >= 1) return tree_t_decider(t);
  return std::nullopt;
}

std::optional<LocalVerifier> find_verifier(std::string_view name) {
  for (const auto& e : verifier_catalog())
    if (e.name == name) return e.verifier;
  if (name == "verifier:always-accept") return always_accept_verifier();
  if (name == "verifier:strawman-eqsize") return strawman_eqsize_verifier();
  constexpr std::string_view prefix = "verifier:strawman-tree:";
  int k = 0;
  if (name.starts_with(prefix) && parse_int(name.substr(prefix.size()), k) && k >= 0 && k <= 62)
    return strawman_tree_verifier(k);
  return std::nullopt;
}

std::optional<CertificateGenerator> find_generator(std::string_view name) {
  for (const auto& e : verifier_catalog())
    if (e.name == name) return e.generate;
  if (name == "verifier:always-accept")
    return CertificateGenerator(
        [](const Configuration& c) { return CertificateVector(static_cast<std::size_t>(c.size())); });
  if (name == "verifier:strawman-eqsize") return strawman_eqsize_certificates();
  constexpr std::string_view prefix = "verifier:strawman-tree:";
  int k = 0;
  if (name.starts_with(prefix) && parse_int(name.substr(prefix.size()), k) && k >= 0 && k <= 62)
    return strawman_tree_certificates(k);
  return std::nullopt;
}

}  // namespace locald
