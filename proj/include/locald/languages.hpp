#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "locald/enumerate.hpp"
#include "locald/graph.hpp"

namespace locald {

struct LanguageId {
  enum class Tag { tree_t, tree, fpf_symmetry_on_trees, eq_size_partition, bipartite };

  Tag tag = Tag::tree;
  int t = 0;  // only for tree_t, >= 1

  static LanguageId tree_t(int t);
  static LanguageId tree() { return {Tag::tree, 0}; }
  static LanguageId fpf_symmetry_on_trees() { return {Tag::fpf_symmetry_on_trees, 0}; }
  static LanguageId eq_size_partition() { return {Tag::eq_size_partition, 0}; }
  static LanguageId bipartite() { return {Tag::bipartite, 0}; }

  friend bool operator==(const LanguageId&, const LanguageId&) = default;
};

/// CLI names: "tree", "tree_t:2", "fpf-sym-trees", "eq-size-partition",
/// "bipartite". Throws ParseError.
LanguageId parse_language(std::string_view name);
std::string language_name(const LanguageId& lang);

/// Exact, centralised membership. Total: configurations whose inputs fall
/// outside the language's alphabet are non-members.
bool member(const LanguageId& lang, const Configuration& config);

/// Input strings a member may carry ({""} or {"0","1"}); Bipartite ignores
/// inputs and reports {""} as its canonical alphabet.
std::vector<Bits> input_alphabet(const LanguageId& lang);

/// All members on n nodes over the language's alphabet: one graph per
/// isomorphism class, and for EqSizePartition every 0/1 input vector on it.
std::vector<Configuration> positive_instances(const LanguageId& lang, int n, int cap = default_enumeration_cap);

/// The complementary set: every connected graph class on n nodes with every
/// input vector over the alphabet that is not a member.
std::vector<Configuration> negative_instances(const LanguageId& lang, int n, int cap = default_enumeration_cap);

}  // namespace locald
