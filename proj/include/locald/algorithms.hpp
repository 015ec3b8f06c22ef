#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locald/languages.hpp"
#include "locald/runtime.hpp"

namespace locald {

/// Radius t+1. A node accepts iff its view carries no inputs, is a tree, and
/// no two view nodes are more than 2t apart (distances taken in the view).
LocalAlgorithm tree_t_decider(int t);

/// Radius 1 distance labelling. Value 0 accepts iff every neighbour holds 1;
/// value d > 0 accepts iff exactly one neighbour holds d-1 and all others
/// hold d+1. Root uniqueness is never checked directly: a connected graph
/// whose labels pass everywhere has exactly one local minimum, and every
/// other node owns exactly one edge towards it, so the edge count is n-1.
LocalVerifier tree_verifier();

/// Tree lift layout, radius 1, language FPFSymmetryOnTrees checked on the
/// decoded quotient.
LocalVerifier fpf_trees_verifier();

/// General quotient layout, radius 1, accepts iff the quotient is balanced.
LocalVerifier eqsize_verifier();

/// One colour bit; accept iff every neighbour holds the other bit.
LocalVerifier bipartite_verifier();

LocalAlgorithm always_accept_decider();
LocalVerifier always_accept_verifier();

/// Deliberately too small Tree verifier: k-bit certificates holding the
/// distance to a centre mod 2^k. Accepts iff the certificate has k bits, the
/// radius-t view is acyclic and (k >= 1) no neighbour repeats the value.
LocalVerifier strawman_tree_verifier(int k, int t = 1);
CertificateGenerator strawman_tree_certificates(int k);

/// Deliberately too small EqSizePartition verifier: a 2-bit certificate with
/// (#zeros - #ones) mod 4. Accepts iff its neighbours hold the same value and
/// the value is 0.
LocalVerifier strawman_eqsize_verifier();
CertificateGenerator strawman_eqsize_certificates();

struct VerifierEntry {
  std::string name;
  LanguageId language;
  LocalVerifier verifier;
  CertificateGenerator generate;
};

/// The four verifiers with their languages and honest generators:
/// verifier:tree, verifier:fpf, verifier:eqsize, verifier:bipartite.
const std::vector<VerifierEntry>& verifier_catalog();

/// "decider:tree_t:N", "decider:always-accept".
std::optional<LocalAlgorithm> find_decider(std::string_view name);
/// Catalog names plus "verifier:always-accept", "verifier:strawman-tree:K"
/// and "verifier:strawman-eqsize".
std::optional<LocalVerifier> find_verifier(std::string_view name);
/// Generator paired with a verifier name, if it has one.
std::optional<CertificateGenerator> find_generator(std::string_view name);

}  // namespace locald
