#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locald/languages.hpp"
#include "locald/runtime.hpp"
#include "locald/search.hpp"

namespace locald {

/// Largest generated certificate over the instances of one language and size.
struct Measurement {
  std::string language;
  std::string claim;
  int n = 0;
  std::size_t instances = 0;
  bool sampled = false;  // random instances instead of every class
  std::size_t max_bits = 0;
};

struct TableOptions {
  std::vector<int> sizes{1, 2, 3, 4, 5, 6, 7, 8, 16, 32, 64};
  int samples = 20;
  std::uint64_t seed = 0;
};

/// Rows Tree_t (t = 1), Tree, FPFSymmetryOnTrees, EqSizePartition and
/// Bipartite. Sizes up to a per-row limit use every member class; larger ones
/// use `samples` seeded random members.
std::vector<Measurement> measure_certificate_sizes(const TableOptions& options);

std::string render_table_text(std::span<const Measurement> rows);
std::string render_table_csv(std::span<const Measurement> rows);

struct ExperimentSpec {
  std::string name;
  LanguageId language;
  std::string algorithm;  // "decider:..." or "verifier:..."
  int min_n = 1;
  int max_n = 5;
  IdStrategy ids;
  std::optional<CertSpace> space;  // verifiers only; default_space otherwise
};

/// The space a verifier's soundness is swept over by default.
CertSpace default_space(std::string_view verifier);

/// Every connected graph class of size n over the language's alphabet.
std::vector<Configuration> all_instances(const LanguageId& lang, int n);

/// Runs check_decides or check_verifies over all_instances for n in range.
/// Throws InvalidInput for unknown algorithm names.
ComplianceReport run_experiment(const ExperimentSpec& spec);

}  // namespace locald
