#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "locald/lift.hpp"
#include "locald/runtime.hpp"

namespace locald {

/// A finite per-instance certificate space.
struct CertSpace {
  enum class Kind { all_bitstrings_up_to, structured_lift, distance_labels, color_bits };

  Kind kind = Kind::color_bits;
  int bound = 0;  // bits, max quotient size or max distance value; 0 means n for the last two
  QuotientFamily family = QuotientFamily::connected_graphs;

  /// Every string of length <= bits at every node.
  static CertSpace all_bitstrings_up_to(int bits) { return {Kind::all_bitstrings_up_to, bits, {}}; }
  /// Every accepted radius-1 lift onto a catalog quotient of size <= max_size
  /// dividing n, written in the general layout (connected_graphs) or the tree
  /// layout (trees).
  static CertSpace structured_lift(int max_size, QuotientFamily family = QuotientFamily::connected_graphs) {
    return {Kind::structured_lift, max_size, family};
  }
  /// Minimal binary of 0..max_value at every node.
  static CertSpace distance_labels(int max_value) { return {Kind::distance_labels, max_value, {}}; }
  static CertSpace color_bits() { return {Kind::color_bits, 0, {}}; }
};

/// "bits:K", "lift:K", "lift-tree:K", "dist:K", "color". Throws ParseError.
CertSpace parse_cert_space(std::string_view text);
std::string cert_space_name(const CertSpace& space);

/// Enumerates the space as a CertificateSpace. Vectors come in odometer
/// order with the last node varying fastest; per-node strings are ordered by
/// length, then value.
CertificateSpace make_certificate_space(const CertSpace& space);

struct SearchLimits {
  int max_nodes = 8;
  std::uint64_t max_candidates = 20'000'000;
};

/// Smallest k <= max_bits such that some vector of strings of length <= k is
/// accepted under every generated id assignment. Throws SearchBudgetExceeded
/// when a level would exceed the limits.
std::optional<int> min_cert_size(const LocalVerifier& ver, const Configuration& config, const IdStrategy& ids,
                                 int max_bits, const SearchLimits& limits = {});

/// A certificate vector from `space` accepted by every node under some
/// generated id assignment, or nothing once the space is exhausted. Throws
/// SearchBudgetExceeded.
std::optional<CertificateVector> soundness_search(const LocalVerifier& ver, const Configuration& config,
                                                  const CertSpace& space, const IdStrategy& ids,
                                                  const SearchLimits& limits = {});

}  // namespace locald
