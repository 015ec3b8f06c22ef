#include "locald/languages.hpp"

#include <algorithm>
#include <charconv>

#include "locald/automorphism.hpp"
#include "locald/error.hpp"

namespace locald {

LanguageId LanguageId::tree_t(int t) {
  if (t < 1) throw Error(ErrorCode::invalid_input, "Tree_t needs t >= 1");
  return {Tag::tree_t, t};
}

LanguageId parse_language(std::string_view name) {
  if (name == "tree") return LanguageId::tree();
  if (name == "fpf-sym-trees") return LanguageId::fpf_symmetry_on_trees();
  if (name == "eq-size-partition") return LanguageId::eq_size_partition();
  if (name == "bipartite") return LanguageId::bipartite();
  constexpr std::string_view prefix = "tree_t:";
  if (name.starts_with(prefix)) {
    auto rest = name.substr(prefix.size());
    int t = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), t);
    if (ec == std::errc{} && ptr == rest.data() + rest.size() && t >= 1) return LanguageId::tree_t(t);
  }
  throw Error(ErrorCode::parse_error, "unknown language '" + std::string(name) + "'");
}

std::string language_name(const LanguageId& lang) {
  switch (lang.tag) {
    case LanguageId::Tag::tree_t: return "tree_t:" + std::to_string(lang.t);
    case LanguageId::Tag::tree: return "tree";
    case LanguageId::Tag::fpf_symmetry_on_trees: return "fpf-sym-trees";
    case LanguageId::Tag::eq_size_partition: return "eq-size-partition";
    case LanguageId::Tag::bipartite: return "bipartite";
  }
  return "?";
}

bool member(const LanguageId& lang, const Configuration& config) {
  const auto& g = config.topology();
  switch (lang.tag) {
    case LanguageId::Tag::tree_t: {
      if (!config.has_empty_inputs() || !is_tree(g)) return false;
      for (int v = 0; v < g.size(); ++v)
        if (eccentricity(g, v) <= lang.t) return true;
      return false;
    }
    case LanguageId::Tag::tree:
      return config.has_empty_inputs() && is_tree(g);
    case LanguageId::Tag::fpf_symmetry_on_trees:
      return config.has_empty_inputs() && is_tree(g) && find_fpf_automorphism(g).has_value();
    case LanguageId::Tag::eq_size_partition: {
      int zeros = 0, ones = 0;
      for (const auto& w : config.inputs()) {
        if (w == "0") ++zeros;
        else if (w == "1") ++ones;
        else return false;
      }
      return zeros == ones;
    }
    case LanguageId::Tag::bipartite:
      return two_coloring(g).has_value();
  }
  return false;
}

std::vector<Bits> input_alphabet(const LanguageId& lang) {
  if (lang.tag == LanguageId::Tag::eq_size_partition) return {"0", "1"};
  return {Bits{}};
}

namespace {

template <typename Keep>
std::vector<Configuration> instances(const LanguageId& lang, int n, int cap, Keep keep) {
  const auto alphabet = input_alphabet(lang);
  std::vector<Configuration> out;
  for (auto& g : enumerate_instances(InstanceKind::connected_graphs, n, cap)) {
    if (alphabet.size() == 1) {
      Configuration c(g);
      if (keep(member(lang, c))) out.push_back(std::move(c));
      continue;
    }
    std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
    while (true) {
      std::vector<Bits> inputs(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < digits.size(); ++i) inputs[i] = alphabet[digits[i]];
      Configuration c(g, std::move(inputs));
      if (keep(member(lang, c))) out.push_back(std::move(c));
      std::size_t i = digits.size();
      while (i > 0 && ++digits[i - 1] == alphabet.size()) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

}  // namespace

std::vector<Configuration> positive_instances(const LanguageId& lang, int n, int cap) {
  if (lang.tag == LanguageId::Tag::tree || lang.tag == LanguageId::Tag::tree_t ||
      lang.tag == LanguageId::Tag::fpf_symmetry_on_trees) {
    std::vector<Configuration> out;
    for (auto& t : enumerate_instances(InstanceKind::trees, n, cap)) {
      Configuration c(std::move(t));
      if (member(lang, c)) out.push_back(std::move(c));
    }
    return out;
  }
  return instances(lang, n, cap, [](bool m) { return m; });
}

std::vector<Configuration> negative_instances(const LanguageId& lang, int n, int cap) {
  return instances(lang, n, cap, [](bool m) { return !m; });
}

}  // namespace locald
