#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "locald/bits.hpp"
#include "locald/graph.hpp"
#include "locald/languages.hpp"

namespace locald {

/// Depth-first traversal bits of a rooted tree: '1' descends to the next
/// child, '0' returns to the parent. Children are visited in ascending order
/// of their own codes, so isomorphic rooted trees share one code. A tree on
/// n nodes takes 2(n-1) bits.
struct TreeCode {
  Bits bits;

  int node_count() const noexcept { return static_cast<int>(bits.size() / 2) + 1; }
  friend bool operator==(const TreeCode&, const TreeCode&) = default;
};

/// Throws NotATree.
TreeCode encode_tree(const GraphTopology& tree, int root);

/// The decoded tree is numbered in preorder: the root is 0 and each node is
/// numbered when first descended into. Throws MalformedCode.
GraphTopology decode_tree(const TreeCode& code);
std::optional<GraphTopology> try_decode_tree(std::string_view bits);

/// rank[v] = the number node v receives in decode_tree(encode_tree(tree, root)).
std::vector<int> tree_preorder_ranks(const GraphTopology& tree, int root);

/// A decoded lift certificate: the claimed quotient and the node's label in it.
struct LiftCertificate {
  Configuration quotient;
  int label = 0;
};

/// Quotient layout, one flat string:
///   length(n')                      self-delimiting, see BitWriter::put_length
///   n'*n' adjacency bits            row-major
///   for each quotient node: length(|w'(i)|) then w'(i)
///   label in ceil(log2 n') bits
/// Throws LabelOutOfRange if label >= n'.
Bits encode_quotient(const Configuration& quotient, int label);

/// Throws MalformedCode for anything that is not exactly such a string with a
/// symmetric, irreflexive, connected adjacency and an in-range label.
LiftCertificate decode_quotient(std::string_view bits);
std::optional<LiftCertificate> try_decode_quotient(std::string_view bits);

/// Exact bit length of encode_quotient for this quotient.
std::size_t quotient_code_length(const Configuration& quotient);

/// Tree lift layout: length(n'), then the n'-node TreeCode, then the label
/// (a preorder rank) in ceil(log2 n') bits. Throws LabelOutOfRange. The
/// decoder only takes codes with children in canonical order, so every
/// (tree, label) pair has exactly one certificate.
Bits encode_tree_certificate(const TreeCode& code, int label);
std::optional<LiftCertificate> try_decode_tree_certificate(std::string_view bits);

/// A certificate the matching catalog verifier accepts under every id
/// assignment. Takes no identifiers, so it cannot depend on them.
///   Tree, Tree_t : distance to the lowest-index tree centre, in binary
///                  (Tree_t is decided without certificates: all empty)
///   FPF trees    : tree self-lift rooted at a centre
///   EqSize       : smallest balanced quotient found by lift search over
///                  proper divisor sizes, else the self-lift
///   Bipartite    : one colour bit
/// Throws NotAMember.
CertificateVector make_certificate(const LanguageId& lang, const Configuration& config);

/// Self-lift of an arbitrary configuration in the quotient layout.
CertificateVector make_self_lift_certificate(const Configuration& config);

/// Self-lift of a tree in the tree layout, rooted at its canonical centre.
CertificateVector make_tree_lift_certificate(const GraphTopology& tree);

}  // namespace locald
