#include "locald/search.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "locald/certificates.hpp"
#include "locald/error.hpp"

namespace locald {

namespace {

int parse_bound(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0)
    throw Error(ErrorCode::parse_error, "bad certificate space '" + std::string(whole) + "'");
  return value;
}

std::vector<Bits> strings_up_to(int bits) {
  std::vector<Bits> out{Bits{}};
  for (int len = 1; len <= bits; ++len)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) out.push_back(to_binary(v, len));
  return out;
}

/// Visits every vector choosing one string per node from `choices`.
bool odometer(int n, const std::vector<Bits>& choices, const CertificateVisitor& visit) {
  std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
  CertificateVector certs(static_cast<std::size_t>(n), choices.front());
  while (true) {
    if (!visit(certs)) return false;
    std::size_t k = digits.size();
    while (k > 0) {
      --k;
      if (++digits[k] < choices.size()) {
        certs[k] = choices[digits[k]];
        break;
      }
      digits[k] = 0;
      certs[k] = choices.front();
      if (k == 0) return true;
    }
    if (digits.empty()) return true;
  }
}

const QuotientCatalog& shared_catalog(int max_size, QuotientFamily family) {
  static std::mutex lock;
  static std::map<std::pair<int, QuotientFamily>, std::unique_ptr<QuotientCatalog>> cache;
  std::lock_guard guard(lock);
  auto& slot = cache[{max_size, family}];
  if (!slot) slot = std::make_unique<QuotientCatalog>(max_size, family);
  return *slot;
}

CertificateVector tree_lift_certificates(const LiftLabeling& lab) {
  const auto& tree = lab.quotient.topology();
  const auto code = encode_tree(tree, 0);
  const auto rank = tree_preorder_ranks(tree, 0);
  CertificateVector out;
  for (int q : lab.lambda) out.push_back(encode_tree_certificate(code, rank[static_cast<std::size_t>(q)]));
  return out;
}

double space_size(const CertSpace& space, int n) {
  double per_node = 0;
  switch (space.kind) {
    case CertSpace::Kind::all_bitstrings_up_to: per_node = std::exp2(space.bound + 1) - 1; break;
    case CertSpace::Kind::distance_labels: per_node = (space.bound == 0 ? n : space.bound) + 1.0; break;
    case CertSpace::Kind::color_bits: per_node = 2; break;
    case CertSpace::Kind::structured_lift: return 0;
  }
  return std::pow(per_node, n);
}

}  // namespace

CertSpace parse_cert_space(std::string_view text) {
  if (text == "color") return CertSpace::color_bits();
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::parse_error, "bad certificate space '" + std::string(text) + "'");
  const auto head = text.substr(0, colon);
  const int bound = parse_bound(text.substr(colon + 1), text);
  if (head == "bits") return CertSpace::all_bitstrings_up_to(bound);
  if (head == "lift") return CertSpace::structured_lift(bound);
  if (head == "lift-tree") return CertSpace::structured_lift(bound, QuotientFamily::trees);
  if (head == "dist") return CertSpace::distance_labels(bound);
  throw Error(ErrorCode::parse_error, "bad certificate space '" + std::string(text) + "'");
}

std::string cert_space_name(const CertSpace& space) {
  switch (space.kind) {
    case CertSpace::Kind::all_bitstrings_up_to: return "bits:" + std::to_string(space.bound);
    case CertSpace::Kind::structured_lift:
      return (space.family == QuotientFamily::trees ? "lift-tree:" : "lift:") + std::to_string(space.bound);
    case CertSpace::Kind::distance_labels: return "dist:" + std::to_string(space.bound);
    case CertSpace::Kind::color_bits: return "color";
  }
  return "color";
}

CertificateSpace make_certificate_space(const CertSpace& space) {
  switch (space.kind) {
    case CertSpace::Kind::all_bitstrings_up_to:
      return [bits = space.bound](const Configuration& c, const CertificateVisitor& visit) {
        odometer(c.size(), strings_up_to(bits), visit);
      };
    case CertSpace::Kind::distance_labels:
      return [max = space.bound](const Configuration& c, const CertificateVisitor& visit) {
        std::vector<Bits> labels;
        for (int d = 0; d <= (max == 0 ? c.size() : max); ++d) labels.push_back(to_binary(static_cast<std::uint64_t>(d)));
        odometer(c.size(), labels, visit);
      };
    case CertSpace::Kind::color_bits:
      return [](const Configuration& c, const CertificateVisitor& visit) { odometer(c.size(), {"0", "1"}, visit); };
    case CertSpace::Kind::structured_lift:
      return [max = space.bound, family = space.family](const Configuration& c, const CertificateVisitor& visit) {
        const auto& catalog = shared_catalog(max == 0 ? c.size() : max, family);
        for_each_lift(c, catalog, [&](const LiftLabeling& lab) {
          return visit(family == QuotientFamily::trees ? tree_lift_certificates(lab) : lift_certificate(lab));
        });
      };
  }
  return {};
}

std::optional<int> min_cert_size(const LocalVerifier& ver, const Configuration& config, const IdStrategy& strategy,
                                 int max_bits, const SearchLimits& limits) {
  if (config.size() > limits.max_nodes)
    throw Error(ErrorCode::search_budget_exceeded, "instance has more than " + std::to_string(limits.max_nodes) + " nodes");
  const auto assignments = generate_id_assignments(strategy, config.size());
  ViewFactory views(config, ver.radius);
  for (int k = 0; k <= max_bits; ++k) {
    if (space_size(CertSpace::all_bitstrings_up_to(k), config.size()) > static_cast<double>(limits.max_candidates))
      throw Error(ErrorCode::search_budget_exceeded, "level " + std::to_string(k) + " exceeds the candidate budget");
    bool found = false;
    odometer(config.size(), strings_up_to(k), [&](const CertificateVector& certs) {
      for (const auto& ids : assignments)
        if (!all_accept(ver, views, ids, certs)) return true;
      found = true;
      return false;
    });
    if (found) return k;
  }
  return std::nullopt;
}

std::optional<CertificateVector> soundness_search(const LocalVerifier& ver, const Configuration& config,
                                                  const CertSpace& space, const IdStrategy& strategy,
                                                  const SearchLimits& limits) {
  if (config.size() > limits.max_nodes)
    throw Error(ErrorCode::search_budget_exceeded, "instance has more than " + std::to_string(limits.max_nodes) + " nodes");
  if (space_size(space, config.size()) > static_cast<double>(limits.max_candidates))
    throw Error(ErrorCode::search_budget_exceeded, "space " + cert_space_name(space) + " exceeds the candidate budget");
  const auto assignments = generate_id_assignments(strategy, config.size());
  ViewFactory views(config, ver.radius);
  std::optional<CertificateVector> found;
  std::uint64_t visited = 0;
  make_certificate_space(space)(config, [&](const CertificateVector& certs) {
    if (++visited > limits.max_candidates)
      throw Error(ErrorCode::search_budget_exceeded, "space " + cert_space_name(space) + " exceeds the candidate budget");
    for (const auto& ids : assignments)
      if (all_accept(ver, views, ids, certs)) {
        found = certs;
        return false;
      }
    return true;
  });
  return found;
}

}  // namespace locald
