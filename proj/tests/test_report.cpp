#include <doctest.h>

#include <sstream>

#include "locald/bits.hpp"
#include "locald/error.hpp"
#include "locald/report.hpp"

using namespace locald;

namespace {

TableOptions small() {
  TableOptions o;
  o.sizes = {1, 2, 3, 4, 5, 6, 16, 32};
  o.samples = 4;
  o.seed = 5;
  return o;
}

}  // namespace

TEST_CASE("certificate size table") {
  const auto rows = measure_certificate_sizes(small());
  CHECK(rows.size() == 5 * 8);
  for (const auto& m : rows) {
    const auto n = static_cast<std::size_t>(m.n);
    if (m.instances == 0) continue;
    if (m.language == "Tree_1") CHECK(m.max_bits == 0);
    if (m.language == "Tree") CHECK(m.max_bits <= ceil_log2(n) + 1);
    if (m.language == "Bipartite") CHECK(m.max_bits == 1);
    if (m.language == "FPFSymmetryOnTrees") CHECK(m.max_bits <= 2 * n + ceil_log2(n) + 16);
    if (m.language == "EqSizePartition") CHECK(m.max_bits <= n * n + 8 * n + 32);
    CHECK(m.sampled == (m.n > 8));
  }
  // exhaustive cells count every member class: 2 non-isomorphic trees on 4 nodes
  for (const auto& m : rows)
    if (m.language == "Tree" && m.n == 4) CHECK(m.instances == 2);
  // odd sizes have no fixed-point-free tree symmetry
  for (const auto& m : rows)
    if (m.language == "FPFSymmetryOnTrees" && m.n % 2 == 1) CHECK(m.instances == 0);
}

TEST_CASE("table output is deterministic") {
  const auto a = measure_certificate_sizes(small());
  const auto b = measure_certificate_sizes(small());
  CHECK(render_table_text(a) == render_table_text(b));
  CHECK(render_table_csv(a) == render_table_csv(b));
}

TEST_CASE("csv layout") {
  const auto rows = measure_certificate_sizes(small());
  std::istringstream in(render_table_csv(rows));
  std::string line;
  std::getline(in, line);
  CHECK(line == "language,n,instances,mode,max_bits,claimed");
  int count = 0;
  while (std::getline(in, line)) {
    ++count;
    CHECK(std::count(line.begin(), line.end(), ',') >= 5);
  }
  CHECK(count == static_cast<int>(rows.size()));
  const auto text = render_table_text(rows);
  CHECK(text.find("EqSizePartition") != std::string::npos);
  CHECK(text.find('*') != std::string::npos);
}

TEST_CASE("experiments") {
  ExperimentSpec tree{"tree", LanguageId::tree(), "verifier:tree", 1, 4, IdStrategy::standard(), std::nullopt};
  const auto r = run_experiment(tree);
  CHECK(r.passed());
  CHECK(r.instances_checked == 1 + 1 + 2 + 6);

  ExperimentSpec dec{"tree_t", LanguageId::tree_t(1), "decider:tree_t:1", 1, 5, IdStrategy::standard(), std::nullopt};
  CHECK(run_experiment(dec).passed());

  ExperimentSpec naive{"naive", LanguageId::tree(), "verifier:always-accept", 3, 3, IdStrategy::standard(),
                       CertSpace::all_bitstrings_up_to(0)};
  const auto bad = run_experiment(naive);
  CHECK_FALSE(bad.passed());
  REQUIRE(bad.soundness_witness);
  CHECK_FALSE(member(LanguageId::tree(), bad.soundness_witness->config));

  ExperimentSpec unknown{"x", LanguageId::tree(), "verifier:nope", 1, 2, IdStrategy::standard(), std::nullopt};
  CHECK_THROWS_AS(run_experiment(unknown), Error);

  CHECK(cert_space_name(default_space("verifier:bipartite")) == "color");
  CHECK(cert_space_name(default_space("verifier:eqsize")) == "lift:6");
  // every 0/1 input vector on K2
  CHECK(all_instances(LanguageId::eq_size_partition(), 2).size() == 4);
}
