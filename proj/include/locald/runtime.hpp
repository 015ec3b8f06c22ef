#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "locald/graph.hpp"
#include "locald/languages.hpp"
#include "locald/view.hpp"

namespace locald {

/// A deterministic radius-t algorithm. `decide` is handed only the node's
/// view, so it cannot read anything outside N_t(v).
struct LocalAlgorithm {
  std::string name;
  int radius = 0;
  std::function<bool(const RadiusView&)> decide;
};

/// Same contract as LocalAlgorithm; the views it receives carry certificates.
struct LocalVerifier {
  std::string name;
  int radius = 0;
  std::function<bool(const RadiusView&)> decide;
};

struct Verdict {
  std::vector<char> per_node;  // 1 = accept

  bool global() const noexcept;
  /// Lowest-index rejecting node, if any.
  std::optional<int> first_rejecting() const noexcept;
};

struct IdStrategy {
  enum class Kind { all_permutations, sampled, standard };

  Kind kind = Kind::standard;
  int samples = 20;
  std::uint64_t seed = 0;

  static IdStrategy all_permutations() { return {Kind::all_permutations, 0, 0}; }
  static IdStrategy sampled(int k, std::uint64_t seed) { return {Kind::sampled, k, seed}; }
  /// Every permutation of 1..n for n <= 5, otherwise 20 seeded injective
  /// maps into 1..n^2.
  static IdStrategy standard(std::uint64_t seed = 0) { return {Kind::standard, 20, seed}; }
};

inline constexpr int exhaustive_id_limit = 5;

/// Deterministic in (strategy, n).
std::vector<IdAssignment> generate_id_assignments(const IdStrategy& strategy, int n);

/// Precomputes the ball shapes of a configuration for one radius so that
/// repeated evaluations under different ids/certificates only relabel.
class ViewFactory {
 public:
  ViewFactory(const Configuration& config, int radius);

  RadiusView view(int v, const IdAssignment& ids, std::span<const Bits> certs) const;
  const BallShape& shape(int v) const { return shapes_[static_cast<std::size_t>(v)]; }
  const Configuration& config() const noexcept { return config_; }
  int radius() const noexcept { return radius_; }

 private:
  Configuration config_;
  int radius_;
  std::vector<BallShape> shapes_;
};

/// Simulates t synchronous rounds of full-information flooding. Each node
/// starts knowing its own id, input and certificate; in every round it sends
/// everything it knows to all neighbours, and receiving over a link teaches
/// it that link as an id pair. Returns each node's knowledge as a view.
std::vector<RadiusView> flood_views(const Configuration& config, const IdAssignment& ids,
                                    std::span<const Bits> certs, int t);

Verdict run_decider(const LocalAlgorithm& alg, const Configuration& config, const IdAssignment& ids);

/// Throws CertificateLengthMismatch unless certs has one entry per node.
Verdict run_verifier(const LocalVerifier& ver, const Configuration& config, const IdAssignment& ids,
                     std::span<const Bits> certs);

/// Early-exit "does every node accept" on prebuilt shapes.
bool all_accept(const LocalVerifier& ver, const ViewFactory& views, const IdAssignment& ids,
                std::span<const Bits> certs);

using CertificateGenerator = std::function<std::optional<CertificateVector>(const Configuration&)>;
/// Return false to stop the enumeration.
using CertificateVisitor = std::function<bool(const CertificateVector&)>;
/// Enumerates a finite certificate space for one configuration.
using CertificateSpace = std::function<void(const Configuration&, const CertificateVisitor&)>;

struct Witness {
  enum class Kind { false_reject, false_accept, completeness, soundness };

  Kind kind;
  Configuration config;
  IdAssignment ids;
  std::optional<CertificateVector> certs;
  std::optional<int> failing_node;
};

struct ComplianceReport {
  std::optional<Witness> completeness_witness;
  std::optional<Witness> soundness_witness;
  std::size_t instances_checked = 0;
  std::size_t certificates_checked = 0;

  bool passed() const noexcept { return !completeness_witness && !soundness_witness; }
};

/// Checks that alg's global verdict equals member(lang, .) for every instance
/// under every generated id assignment. Stops at the first disagreement.
ComplianceReport check_decides(const LocalAlgorithm& alg, const LanguageId& lang,
                               std::span<const Configuration> instances, const IdStrategy& ids);

/// Completeness: every member's generated certificate is accepted under every
/// generated id assignment. Soundness: for every non-member, no certificate
/// in `space` is accepted under any generated id assignment. Instances are
/// split with the membership oracle.
ComplianceReport check_verifies(const LocalVerifier& ver, const LanguageId& lang,
                                std::span<const Configuration> instances, const CertificateGenerator& generate,
                                const CertificateSpace& space, const IdStrategy& ids);

const char* to_string(Witness::Kind kind) noexcept;
nlohmann::json to_json(const ComplianceReport& report);

}  // namespace locald
