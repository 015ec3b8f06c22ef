#include "locald/report.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "locald/algorithms.hpp"
#include "locald/certificates.hpp"
#include "locald/enumerate.hpp"
#include "locald/error.hpp"

namespace locald {

namespace {

using Sampler = std::function<std::optional<Configuration>(int n, std::mt19937_64&)>;

struct Row {
  LanguageId lang;
  std::string label;
  std::string claim;
  int exhaustive_limit;
  Sampler sample;
};

GraphTopology random_connected(int n, double extra, std::mt19937_64& rng) {
  auto edges = random_tree(n, rng).edges();
  std::bernoulli_distribution coin(extra);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (std::find(edges.begin(), edges.end(), Edge{u, v}) == edges.end() && coin(rng)) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

GraphTopology mirrored_tree(int half, std::mt19937_64& rng) {
  const auto tree = random_tree(half, rng);
  std::vector<Edge> edges;
  for (auto [u, v] : tree.edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(u + half, v + half);
  }
  edges.emplace_back(0, half);
  return build_graph(2 * half, edges);
}

std::vector<Row> table_rows() {
  std::vector<Row> rows;
  rows.push_back({LanguageId::tree_t(1), "Tree_1", "0 (decided in 2 rounds)", 8,
                  [](int n, std::mt19937_64&) -> std::optional<Configuration> {
                    return Configuration(n == 1 ? GraphTopology{} : star_graph(n - 1));
                  }});
  rows.push_back({LanguageId::tree(), "Tree", "Theta(log n), distance labelling", 8,
                  [](int n, std::mt19937_64& rng) -> std::optional<Configuration> {
                    return Configuration(random_tree(n, rng));
                  }});
  rows.push_back({LanguageId::fpf_symmetry_on_trees(), "FPFSymmetryOnTrees", "Theta(n)", 8,
                  [](int n, std::mt19937_64& rng) -> std::optional<Configuration> {
                    if (n % 2 != 0) return std::nullopt;
                    return Configuration(mirrored_tree(n / 2, rng));
                  }});
  rows.push_back({LanguageId::eq_size_partition(), "EqSizePartition", "Theta(n^2)", 6,
                  [](int n, std::mt19937_64& rng) -> std::optional<Configuration> {
                    if (n % 2 != 0) return std::nullopt;
                    std::vector<Bits> inputs(static_cast<std::size_t>(n), "0");
                    std::fill(inputs.begin(), inputs.begin() + n / 2, "1");
                    std::shuffle(inputs.begin(), inputs.end(), rng);
                    return Configuration(random_connected(n, 0.3, rng), std::move(inputs));
                  }});
  rows.push_back({LanguageId::bipartite(), "Bipartite", "O(1)", 7,
                  [](int n, std::mt19937_64& rng) -> std::optional<Configuration> {
                    if (n >= 4 && n % 2 == 0 && std::bernoulli_distribution(0.5)(rng))
                      return Configuration(cycle_graph(n));
                    return Configuration(random_tree(n, rng));
                  }});
  return rows;
}

std::size_t max_size(const CertificateVector& certs) {
  std::size_t out = 0;
  for (const auto& c : certs) out = std::max(out, c.size());
  return out;
}

}  // namespace

std::vector<Measurement> measure_certificate_sizes(const TableOptions& options) {
  std::vector<Measurement> out;
  for (const auto& row : table_rows()) {
    for (int n : options.sizes) {
      Measurement m{row.label, row.claim, n, 0, n > row.exhaustive_limit, 0};
      auto record = [&](const Configuration& c) {
        ++m.instances;
        m.max_bits = std::max(m.max_bits, max_size(make_certificate(row.lang, c)));
      };
      if (!m.sampled) {
        for (const auto& c : positive_instances(row.lang, n)) record(c);
      } else {
        std::mt19937_64 rng(options.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n) * 131 +
                            static_cast<std::uint64_t>(out.size()));
        for (int s = 0; s < options.samples; ++s)
          if (auto c = row.sample(n, rng); c && member(row.lang, *c)) record(*c);
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::string render_table_text(std::span<const Measurement> rows) {
  std::vector<int> sizes;
  std::vector<std::string> languages;
  for (const auto& m : rows) {
    if (std::find(sizes.begin(), sizes.end(), m.n) == sizes.end()) sizes.push_back(m.n);
    if (std::find(languages.begin(), languages.end(), m.language) == languages.end()) languages.push_back(m.language);
  }
  std::ostringstream os;
  os << std::left << std::setw(20) << "language";
  for (int n : sizes) os << std::right << std::setw(6) << ("n=" + std::to_string(n));
  os << "  claimed\n";
  for (const auto& lang : languages) {
    os << std::left << std::setw(20) << lang;
    std::string claim;
    for (int n : sizes) {
      auto it = std::find_if(rows.begin(), rows.end(), [&](const Measurement& m) { return m.language == lang && m.n == n; });
      std::string cell = "-";
      if (it != rows.end()) {
        claim = it->claim;
        if (it->instances > 0) cell = std::to_string(it->max_bits) + (it->sampled ? "*" : "");
      }
      os << std::right << std::setw(6) << cell;
    }
    os << "  " << claim << "\n";
  }
  os << "max certificate bits over members; * = seeded sample, - = no members; logs base 2\n";
  return os.str();
}

std::string render_table_csv(std::span<const Measurement> rows) {
  std::ostringstream os;
  os << "language,n,instances,mode,max_bits,claimed\n";
  for (const auto& m : rows)
    os << m.language << ',' << m.n << ',' << m.instances << ',' << (m.sampled ? "sampled" : "exhaustive") << ','
       << m.max_bits << ",\"" << m.claim << "\"\n";
  return os.str();
}

CertSpace default_space(std::string_view verifier) {
  if (verifier == "verifier:tree") return CertSpace::distance_labels(0);
  if (verifier == "verifier:bipartite") return CertSpace::color_bits();
  if (verifier == "verifier:fpf") return CertSpace::structured_lift(0, QuotientFamily::trees);
  if (verifier == "verifier:eqsize") return CertSpace::structured_lift(6);
  return CertSpace::all_bitstrings_up_to(1);
}

std::vector<Configuration> all_instances(const LanguageId& lang, int n) {
  auto out = positive_instances(lang, n);
  auto neg = negative_instances(lang, n);
  out.insert(out.end(), std::make_move_iterator(neg.begin()), std::make_move_iterator(neg.end()));
  return out;
}

ComplianceReport run_experiment(const ExperimentSpec& spec) {
  std::vector<Configuration> instances;
  for (int n = spec.min_n; n <= spec.max_n; ++n) {
    auto batch = all_instances(spec.language, n);
    instances.insert(instances.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  if (auto alg = find_decider(spec.algorithm)) return check_decides(*alg, spec.language, instances, spec.ids);
  auto ver = find_verifier(spec.algorithm);
  if (!ver) throw Error(ErrorCode::invalid_input, "unknown algorithm '" + spec.algorithm + "'");
  auto gen = find_generator(spec.algorithm);
  const auto space = make_certificate_space(spec.space.value_or(default_space(spec.algorithm)));
  return check_verifies(*ver, spec.language, instances, *gen, space, spec.ids);
}

}  // namespace locald
