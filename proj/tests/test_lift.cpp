#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "locald/certificates.hpp"
#include "locald/enumerate.hpp"
#include "locald/error.hpp"
#include "locald/languages.hpp"
#include "locald/lift.hpp"
#include "oracles.hpp"

using namespace locald;

namespace {

LiftLabeling c6_over_c3() {
  LiftLabeling lab{Configuration(cycle_graph(3)), {}};
  for (int v = 0; v < 6; ++v) lab.lambda.push_back(v % 3);
  return lab;
}

LiftLabeling identity(const Configuration& c) {
  LiftLabeling lab{c, {}};
  for (int v = 0; v < c.size(); ++v) lab.lambda.push_back(v);
  return lab;
}

bool induced_connected(const GraphTopology& g, const std::vector<int>& set) {
  std::set<int> in(set.begin(), set.end()), seen{set.front()};
  std::vector<int> stack{set.front()};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u))
      if (in.count(w) && seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == in.size();
}

/// Every map V -> V' passing the radius-1 check, by brute force.
std::size_t brute_force_lifts(const Configuration& c, const Configuration& q) {
  const int n = c.size(), k = q.size();
  std::vector<int> lambda(static_cast<std::size_t>(n), 0);
  std::size_t count = 0;
  while (true) {
    if (check_lift(c, LiftLabeling{q, lambda}, 1).global()) ++count;
    int i = n - 1;
    while (i >= 0 && ++lambda[i] == k) lambda[i--] = 0;
    if (i < 0) return count;
  }
}

}  // namespace

TEST_CASE("lift check examples") {
  const Configuration c6(cycle_graph(6));
  auto lab = c6_over_c3();
  CHECK(check_lift(c6, lab, 1).global());
  CHECK(check_lift(c6, lab, 2).global());
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : enumerate_instances(InstanceKind::connected_graphs, n))
      CHECK(check_lift(Configuration(g), identity(Configuration(g)), 1).global());
  lab.lambda[4] = 0;
  CHECK_FALSE(check_lift(c6, lab, 1).global());
  lab.lambda[4] = 3;
  CHECK_THROWS_AS(check_lift(c6, lab, 1), Error);
  CHECK_THROWS_AS(check_lift(c6, c6_over_c3(), 0), Error);

  // a wrong input is caught
  const Configuration c6w(cycle_graph(6), {"0", "1", "1", "0", "1", "0"});
  const LiftLabeling inputs{Configuration(cycle_graph(3), {"0", "1", "1"}), c6_over_c3().lambda};
  CHECK_FALSE(check_lift(c6w, inputs, 1).global());
}

TEST_CASE("fiber statistics examples") {
  const Configuration c6(cycle_graph(6), {"0", "1", "1", "0", "1", "1"});
  const LiftLabeling lab{Configuration(cycle_graph(3), {"0", "1", "1"}), c6_over_c3().lambda};
  const auto stats = fiber_stats(c6, lab);
  CHECK(stats.fiber_sizes == std::vector<int>{2, 2, 2});
  CHECK(stats.multiplicity == 2);
  CHECK(stats.degrees_constant);
  CHECK(stats.inputs_constant);
  CHECK(c6.size() == stats.multiplicity * lab.quotient.size());
  // input value counts scale by the multiplicity
  CHECK(std::count(c6.inputs().begin(), c6.inputs().end(), "1") ==
        2 * std::count(lab.quotient.inputs().begin(), lab.quotient.inputs().end(), "1"));

  const Configuration p4(path_graph(4));
  CHECK(fiber_stats(p4, identity(p4)).multiplicity == 1);
  auto bad = c6_over_c3();
  bad.lambda[0] = 1;
  try {
    fiber_stats(Configuration(cycle_graph(6)), bad);
    FAIL("expected LiftCheckFailed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::lift_check_failed);
  }
}

TEST_CASE("quotient partition examples") {
  const Configuration c6(cycle_graph(6));
  const auto sets = quotient_partition(c6, c6_over_c3(), 0);
  REQUIRE(sets.size() == 2);
  CHECK(sets[0] == std::vector<int>{0, 1, 5});
  CHECK(sets[1] == std::vector<int>{2, 3, 4});
  const Configuration p4(path_graph(4));
  for (int i = 0; i < 4; ++i) CHECK(quotient_partition(p4, identity(p4), i) == std::vector<std::vector<int>>{{0, 1, 2, 3}});
}

TEST_CASE("random covers satisfy the fiber and partition properties") {
  std::mt19937_64 rng(99);
  std::vector<GraphTopology> bases;
  for (int n = 1; n <= 4; ++n)
    for (auto& g : enumerate_instances(InstanceKind::connected_graphs, n)) bases.push_back(g);
  int built = 0;
  for (const auto& base : bases)
    for (int l = 1; l <= 3; ++l) {
      std::vector<Bits> inputs;
      for (int i = 0; i < base.size(); ++i) inputs.push_back(i % 2 ? "1" : "0");
      auto cover = random_cover(Configuration(base, inputs), l, rng);
      if (!cover) continue;
      ++built;
      const auto& [config, lab] = *cover;
      REQUIRE(check_lift(config, lab, 1).global());
      CHECK(check_lift(config, lab, 2).global());
      const auto stats = fiber_stats(config, lab);
      CHECK(stats.multiplicity == l);
      for (int i = 0; i < base.size(); ++i) {
        const auto sets = quotient_partition(config, lab, i);
        CHECK(sets.size() == static_cast<std::size_t>(l));
        std::vector<int> hits(static_cast<std::size_t>(config.size()), 0);
        for (const auto& s : sets) {
          CHECK(induced_connected(config.topology(), s));
          std::set<int> labels;
          for (int v : s) {
            ++hits[v];
            labels.insert(lab.lambda[v]);
          }
          CHECK(labels.size() == static_cast<std::size_t>(base.size()));
          CHECK(s.size() == static_cast<std::size_t>(base.size()));
        }
        CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
      }
    }
  // a cover of a tree with l >= 2 is a forest of l copies, so only cyclic bases give l = 2, 3
  const auto cyclic = std::count_if(bases.begin(), bases.end(), [](const GraphTopology& g) { return has_cycle(g); });
  CHECK(built == static_cast<int>(bases.size() + 2 * cyclic));
}

TEST_CASE("labelling search matches brute force") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : enumerate_instances(InstanceKind::connected_graphs, n))
      for (int k = 1; k <= std::min(n, 3); ++k)
        for (const auto& q : enumerate_instances(InstanceKind::connected_graphs, k)) {
          std::vector<Bits> gin, qin;
          for (int v = 0; v < n; ++v) gin.push_back(v % 2 ? "1" : "0");
          for (int v = 0; v < k; ++v) qin.push_back(v % 2 ? "1" : "0");
          const Configuration c(g, gin), quotient(q, qin);
          std::size_t found = 0;
          enumerate_lift_labelings(c, quotient, [&](const std::vector<int>& lambda) {
            CHECK(check_lift(c, LiftLabeling{quotient, lambda}, 1).global());
            ++found;
            return true;
          });
          CHECK(found == brute_force_lifts(c, quotient));
        }
}

TEST_CASE("for_each_lift misses no accepted lift") {
  // brute force over every quotient class and input vector, with no prefilter
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : enumerate_instances(InstanceKind::connected_graphs, n))
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<Bits> gin;
        for (int v = 0; v < n; ++v) gin.push_back((mask >> v) & 1 ? "1" : "0");
        const Configuration c(g, gin);
        std::map<std::pair<int, Bits>, std::size_t> want, got;
        for (int k = 1; k <= n; ++k)
          for (const auto& q : enumerate_instances(InstanceKind::connected_graphs, k))
            for (int qm = 0; qm < (1 << k); ++qm) {
              std::vector<Bits> qin;
              for (int v = 0; v < k; ++v) qin.push_back((qm >> v) & 1 ? "1" : "0");
              const Configuration quotient(q, qin);
              if (auto count = brute_force_lifts(c, quotient)) want[{k, canonical_form(q) + "|" + std::to_string(qm)}] += count;
            }
        const QuotientCatalog catalog(4, QuotientFamily::connected_graphs);
        for_each_lift(c, catalog, [&](const LiftLabeling& lab) {
          int qm = 0;
          for (int v = 0; v < lab.quotient.size(); ++v) qm |= (lab.quotient.input(v) == "1") << v;
          ++got[{lab.quotient.size(), canonical_form(lab.quotient.topology()) + "|" + std::to_string(qm)}];
          return true;
        });
        CHECK(got == want);
      }
}

TEST_CASE("accepted lifts of trees are isomorphic copies") {
  for (int n = 1; n <= 6; ++n) {
    const QuotientCatalog trees(n, QuotientFamily::trees), graphs(n, QuotientFamily::connected_graphs);
    for (const auto& t : enumerate_instances(InstanceKind::trees, n)) {
      const Configuration c(t);
      for (const auto* catalog : {&trees, &graphs})
        for_each_lift(c, *catalog, [&](const LiftLabeling& lab) {
          CHECK(lab.quotient.size() == n);
          CHECK(graphs_isomorphic(lab.quotient.topology(), t));
          return true;
        });
    }
  }
}

TEST_CASE("lifts of members stay members") {
  const QuotientCatalog graphs(5, QuotientFamily::connected_graphs);
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : enumerate_instances(InstanceKind::connected_graphs, n))
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<Bits> inputs;
        for (int v = 0; v < n; ++v) inputs.push_back((mask >> v) & 1 ? "1" : "0");
        const Configuration c(g, inputs);
        for_each_lift(c, graphs, [&](const LiftLabeling& lab) {
          if (member(LanguageId::eq_size_partition(), lab.quotient)) CHECK(member(LanguageId::eq_size_partition(), c));
          return true;
        });
      }

  std::mt19937_64 rng(17);
  for (int k = 1; k <= 4; ++k)
    for (const auto& base : enumerate_instances(InstanceKind::connected_graphs, k))
      for (int l = 1; l <= 8 / k; ++l)
        for (int mask = 0; mask < (1 << k); ++mask) {
          std::vector<Bits> inputs;
          for (int v = 0; v < k; ++v) inputs.push_back((mask >> v) & 1 ? "1" : "0");
          const Configuration q(base, inputs);
          if (auto cover = random_cover(q, l, rng))
            CHECK(member(LanguageId::eq_size_partition(), cover->first) == member(LanguageId::eq_size_partition(), q));
        }

  for (int n = 1; n <= 8; ++n) {
    const QuotientCatalog trees(n, QuotientFamily::trees);
    for (const auto& t : enumerate_instances(InstanceKind::trees, n))
      for_each_lift(Configuration(t), trees, [&](const LiftLabeling& lab) {
        if (member(LanguageId::fpf_symmetry_on_trees(), lab.quotient))
          CHECK(member(LanguageId::fpf_symmetry_on_trees(), Configuration(t)));
        return true;
      });
  }
}
