#pragma once

#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "locald/certificates.hpp"
#include "locald/graph.hpp"
#include "locald/languages.hpp"
#include "locald/runtime.hpp"
#include "locald/view.hpp"

namespace locald {

/// A claimed covering of a configuration onto a quotient: lambda[v] names the
/// quotient node that graph node v maps to.
struct LiftLabeling {
  Configuration quotient;
  std::vector<int> lambda;
};

/// The local lift checks for one view. `labels[u]` is the quotient label of
/// view node u. Nodes closer than t to the root must have their neighbour
/// labels form exactly N'(label) (a bijection, so the degree matches too);
/// every node in the view must carry the input of its quotient node.
bool local_lift_check(const RadiusView& view, const Configuration& quotient, std::span<const int> labels, int t);

/// Per-node verdict of the radius-t lift check. Global acceptance means
/// `config` is a t-lifted configuration of lab.quotient.
/// Throws LabelOutOfRange, InvalidInput (t < 1 or lambda size).
Verdict check_lift(const Configuration& config, const LiftLabeling& lab, int t);

struct FiberStats {
  std::vector<int> fiber_sizes;  // indexed by quotient node
  int multiplicity = 0;          // common fiber size, 0 if sizes differ
  bool degrees_constant = false;
  bool inputs_constant = false;
};

/// Throws LiftCheckFailed unless check_lift(config, lab, 1) accepts.
FiberStats fiber_stats(const Configuration& config, const LiftLabeling& lab);

/// Splits the nodes into one connected set per member of the fiber over
/// quotient node i, each set holding exactly one node of every fiber. Each
/// set grows from its fiber node along the quotient's BFS tree from i (ties
/// broken by smallest label), taking the neighbour that carries the next
/// label. Throws LiftCheckFailed.
std::vector<std::vector<int>> quotient_partition(const Configuration& config, const LiftLabeling& lab, int i);

using LiftDecoder = std::function<std::optional<LiftCertificate>(std::string_view)>;

/// Verifier of the lift scheme: decode the certificates in the radius-t view,
/// require one common quotient, run local_lift_check, then accept iff the
/// quotient is a member of `lang`. Malformed certificates are rejections.
LocalVerifier lift_verifier(std::string name, const LanguageId& lang, int t, LiftDecoder decode);

/// lift_verifier over the general quotient layout.
LocalVerifier universal_lift_verifier(const LanguageId& lang, int t);

/// Per-node certificates encoding lab in the quotient layout.
CertificateVector lift_certificate(const LiftLabeling& lab);

/// Every labelling of config onto `quotient` passing the radius-1 lift check,
/// found by backtracking along a BFS order of config. Return false to stop.
void enumerate_lift_labelings(const Configuration& config, const Configuration& quotient,
                              const std::function<bool(const std::vector<int>&)>& visit);

enum class QuotientFamily { connected_graphs, trees };

/// Quotient candidates of sizes 1..max_size, one per isomorphism class.
class QuotientCatalog {
 public:
  QuotientCatalog(int max_size, QuotientFamily family);

  int max_size() const noexcept { return max_size_; }
  QuotientFamily family() const noexcept { return family_; }
  const std::vector<GraphTopology>& of_size(int n) const { return graphs_[static_cast<std::size_t>(n)]; }

 private:
  int max_size_;
  QuotientFamily family_;
  std::vector<std::vector<GraphTopology>> graphs_;
};

/// Visits every accepted radius-1 lift of config onto a catalog quotient
/// whose size divides n, sizes ascending. Quotient inputs range over the
/// input strings occurring in config; candidates whose degree multiset or
/// input counts do not scale by l = n/n' are skipped, since every accepted
/// lift has equal fibers. Return false to stop.
void for_each_lift(const Configuration& config, const QuotientCatalog& catalog,
                   const std::function<bool(const LiftLabeling&)>& visit);

/// A uniformly shuffled l-fold cover of `base`: node (i, a) for a < l, and
/// for each base edge {i, j} a random matching (i, a) - (j, pi(a)). Nothing
/// if the cover is disconnected after `attempts` tries.
std::optional<std::pair<Configuration, LiftLabeling>> random_cover(const Configuration& base, int l,
                                                                   std::mt19937_64& rng, int attempts = 64);

}  // namespace locald
