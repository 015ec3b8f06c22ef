#include <doctest.h>

#include <random>

#include "locald/automorphism.hpp"
#include "locald/bits.hpp"
#include "locald/enumerate.hpp"
#include "locald/error.hpp"
#include "locald/graph.hpp"
#include "locald/io.hpp"
#include "locald/view.hpp"
#include "oracles.hpp"

using namespace locald;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::parse_error;
}

std::vector<GraphTopology> small_graphs(int max_n) {
  std::vector<GraphTopology> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& g : enumerate_instances(InstanceKind::connected_graphs, n)) out.push_back(g);
  return out;
}

GraphTopology shuffled(const GraphTopology& g, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.size()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace

TEST_CASE("build_graph examples") {
  const auto tri = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(tri.size() == 3);
  CHECK(tri.edge_count() == 3);
  CHECK(tri.adjacent(2, 0));
  const auto k2 = build_graph(2, {{0, 1}});
  CHECK(k2.edges() == std::vector<Edge>{{0, 1}});
  CHECK(code_of([] { build_graph(4, {{0, 1}, {2, 3}}); }) == ErrorCode::disconnected);
  CHECK(code_of([] { build_graph(2, {{0, 0}, {0, 1}}); }) == ErrorCode::self_loop);
  CHECK(code_of([] { build_graph(2, {{0, 1}, {1, 0}}); }) == ErrorCode::duplicate_edge);
  CHECK(code_of([] { build_graph(2, {{0, 2}}); }) == ErrorCode::index_out_of_range);
}

TEST_CASE("adjacency is symmetric and sorted") {
  for (const auto& g : small_graphs(5))
    for (int u = 0; u < g.size(); ++u) {
      auto nb = g.neighbors(u);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (int v : nb) CHECK(g.adjacent(v, u));
    }
}

TEST_CASE("distances, trees and colourings agree with brute force") {
  for (const auto& g : small_graphs(6)) {
    const auto a = oracle::matrix(g);
    const auto d = oracle::floyd(a);
    const auto all = all_pairs_distances(g);
    for (int u = 0; u < g.size(); ++u)
      for (int v = 0; v < g.size(); ++v) CHECK(all[u][v] == d[u][v]);
    CHECK(is_tree(g) == oracle::is_tree(a));
    CHECK(has_cycle(g) == !oracle::is_tree(a));
    const auto colour = two_coloring(g);
    CHECK(colour.has_value() == oracle::two_colorable(a));
    if (colour)
      for (auto [u, v] : g.edges()) CHECK((*colour)[u] != (*colour)[v]);
  }
}

TEST_CASE("configuration and id validation") {
  const auto p3 = path_graph(3);
  CHECK(code_of([&] { Configuration(p3, {"0", "1"}); }) == ErrorCode::invalid_input);
  CHECK(code_of([&] { Configuration(p3, {"0", "2", "1"}); }) == ErrorCode::invalid_input);
  const Configuration c(p3, {"", "101", "1"});
  CHECK(c.max_input_length() == 3);
  CHECK(default_universe_bound(4) == 16);
  CHECK(code_of([] { IdAssignment({1, 1}, 4); }) == ErrorCode::invalid_input);
  CHECK(code_of([] { IdAssignment({1, 5}, 4); }) == ErrorCode::invalid_input);
  CHECK(code_of([] { IdAssignment({1, 2}, 5); }) == ErrorCode::invalid_input);
  CHECK(IdAssignment::sequential(3)[2] == 3);
}

TEST_CASE("ball examples") {
  const Configuration p5(path_graph(5));
  const auto ids = IdAssignment::sequential(5);
  auto v = ball(p5, ids, {}, 2, 2);
  CHECK(v.size() == 5);
  CHECK(v.edge_count() == 4);

  const Configuration c4(cycle_graph(4));
  v = ball(c4, IdAssignment::sequential(4), {}, 0, 2);
  CHECK(v.size() == 4);
  CHECK(v.edge_count() == 4);

  const Configuration c6(cycle_graph(6));
  v = ball(c6, IdAssignment::sequential(6), {}, 0, 2);
  CHECK(v.size() == 5);
  CHECK(v.edge_count() == 4);
  CHECK(v.distance[RadiusView::root] == 0);
}

TEST_CASE("ball matches the definition for every node and radius") {
  for (const auto& g : small_graphs(6)) {
    const Configuration c(g);
    const auto a = oracle::matrix(g);
    const auto ids = IdAssignment::sequential(g.size());
    for (int t = 0; t <= 3; ++t)
      for (int v = 0; v < g.size(); ++v) {
        const auto want = oracle::ball(a, v, t);
        const auto shape = ball_shape(g, v, t);
        std::set<int> nodes(shape.members.begin(), shape.members.end());
        REQUIRE(nodes == want.nodes);
        std::set<std::pair<int, int>> edges;
        for (std::size_t u = 0; u < shape.members.size(); ++u)
          for (int w : shape.adjacency[u]) {
            const int x = shape.members[u], y = shape.members[static_cast<std::size_t>(w)];
            edges.insert({std::min(x, y), std::max(x, y)});
          }
        CHECK(edges == want.edges);
        const auto view = ball(c, ids, {}, v, t);
        CHECK(view.label(RadiusView::root).id == ids[v]);
        for (int u = 1; u < view.size(); ++u) {
          bool has_closer = false;
          for (int w : view.adjacency[u]) has_closer |= w < u && view.distance[w] + 1 == view.distance[u];
          CHECK(has_closer);
        }
        for (int u = 0; u < view.size(); ++u)
          for (int w : view.adjacency[u]) CHECK_FALSE((view.distance[u] == t && view.distance[w] == t));
      }
  }
}

TEST_CASE("views_isomorphic examples") {
  const Configuration p5(path_graph(5));
  const auto ids = IdAssignment::sequential(5);
  CHECK(views_isomorphic(ball(p5, ids, {}, 2, 2), ball(p5, ids, {}, 2, 2)));
  CHECK_FALSE(views_isomorphic(ball(p5, ids, {}, 0, 1), ball(p5, ids, {}, 2, 1)));
  const Configuration c6(cycle_graph(6));
  CHECK(views_isomorphic(ball(p5, ids, {}, 2, 2), ball(c6, IdAssignment::sequential(6), {}, 0, 2)));

  const CertificateVector a{"0", "1", "0", "1", "0"}, b{"0", "1", "1", "1", "0"};
  CHECK_FALSE(views_isomorphic(ball(p5, ids, a, 2, 1), ball(p5, ids, b, 2, 1)));
  const IdAssignment other({2, 1, 3, 4, 5}, 25);
  CHECK(views_isomorphic(ball(p5, ids, {}, 2, 2), ball(p5, other, {}, 2, 2)));
  CHECK_FALSE(views_isomorphic(ball(p5, ids, {}, 2, 2), ball(p5, other, {}, 2, 2), true));
}

TEST_CASE("views_isomorphic is an equivalence on random triples") {
  std::mt19937_64 rng(7);
  const auto graphs = small_graphs(5);
  std::vector<RadiusView> views;
  for (const auto& g : graphs)
    for (int v = 0; v < g.size(); ++v) views.push_back(ball(Configuration(g), IdAssignment::sequential(g.size()), {}, v, 1));
  std::uniform_int_distribution<std::size_t> pick(0, views.size() - 1);
  for (int k = 0; k < 3000; ++k) {
    const auto &a = views[pick(rng)], &b = views[pick(rng)], &c = views[pick(rng)];
    CHECK(views_isomorphic(a, a));
    CHECK(views_isomorphic(a, b) == views_isomorphic(b, a));
    if (views_isomorphic(a, b) && views_isomorphic(b, c)) CHECK(views_isomorphic(a, c));
  }
}

TEST_CASE("relabelled balls stay isomorphic") {
  std::mt19937_64 rng(11);
  for (const auto& g : small_graphs(6)) {
    std::vector<int> perm(static_cast<std::size_t>(g.size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = relabel(g, perm);
    for (int v = 0; v < g.size(); ++v)
      CHECK(views_isomorphic(ball(Configuration(g), IdAssignment::sequential(g.size()), {}, v, 2),
                             ball(Configuration(h), IdAssignment::sequential(g.size()), {}, perm[v], 2)));
  }
}

TEST_CASE("fixed-point-free automorphism examples") {
  auto k2 = find_fpf_automorphism(complete_graph(2));
  REQUIRE(k2);
  CHECK(k2->mapping == std::vector<int>{1, 0});
  CHECK_FALSE(find_fpf_automorphism(path_graph(3)));
  auto p4 = find_fpf_automorphism(path_graph(4));
  REQUIRE(p4);
  CHECK(p4->mapping == std::vector<int>{3, 2, 1, 0});
  CHECK_FALSE(find_fpf_automorphism(GraphTopology{}));
}

TEST_CASE("fpf search agrees with the permutation scan on all graphs n <= 6") {
  for (const auto& g : small_graphs(6)) {
    const auto found = find_fpf_automorphism(g);
    CHECK(found.has_value() == oracle::has_fpf_automorphism(oracle::matrix(g)));
    if (found) {
      CHECK(found->is_bijective());
      CHECK(found->is_fixed_point_free());
      CHECK(is_automorphism(g, *found));
    }
  }
}

TEST_CASE("tree codes and centres") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& t : enumerate_instances(InstanceKind::trees, n)) {
      const auto a = oracle::matrix(t);
      const auto d = oracle::floyd(a);
      std::vector<int> ecc;
      for (auto& row : d) ecc.push_back(*std::max_element(row.begin(), row.end()));
      const int r = *std::min_element(ecc.begin(), ecc.end());
      std::vector<int> want;
      for (int v = 0; v < n; ++v)
        if (ecc[v] == r) want.push_back(v);
      CHECK(tree_centers(t) == want);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          CHECK((rooted_tree_code(t, u) == rooted_tree_code(t, v)) == oracle::rooted_isomorphic(a, u, a, v));
    }
  CHECK(code_of([] { rooted_tree_code(cycle_graph(3), 0); }) == ErrorCode::not_a_tree);
}

TEST_CASE("enumeration examples and counts") {
  CHECK(enumerate_instances(InstanceKind::trees, 3).size() == 1);
  CHECK(enumerate_instances(InstanceKind::trees, 4).size() == 2);
  CHECK(enumerate_instances(InstanceKind::labeled_trees, 4).size() == 16);
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
  const std::vector<std::size_t> trees{1, 1, 1, 2, 3, 6, 11, 23};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_instances(InstanceKind::connected_graphs, n).size() == connected[n - 1]);
  for (int n = 1; n <= 8; ++n) CHECK(enumerate_instances(InstanceKind::trees, n).size() == trees[n - 1]);
  for (int n = 2; n <= 7; ++n) {
    std::size_t want = 1;
    for (int k = 0; k < n - 2; ++k) want *= static_cast<std::size_t>(n);
    const auto all = enumerate_instances(InstanceKind::labeled_trees, n);
    CHECK(all.size() == want);
    std::set<std::vector<Edge>> distinct;
    for (const auto& t : all) {
      CHECK(is_tree(t));
      distinct.insert(t.edges());
    }
    CHECK(distinct.size() == want);
  }
  CHECK(code_of([] { enumerate_instances(InstanceKind::connected_graphs, 9); }) == ErrorCode::cap_exceeded);
}

TEST_CASE("canonical form is the brute-force minimum") {
  std::mt19937_64 rng(3);
  for (const auto& g : small_graphs(6)) {
    const auto a = oracle::matrix(g);
    CHECK(canonical_form(g) == oracle::canonical(a));
    const auto h = shuffled(g, rng);
    CHECK(canonical_form(h) == canonical_form(g));
    CHECK(graphs_isomorphic(g, h));
    const auto perm = canonical_labeling(h);
    const auto c = relabel(h, perm);
    std::string s;
    for (int j = 1; j < c.size(); ++j)
      for (int i = 0; i < j; ++i) s += c.adjacent(i, j) ? '1' : '0';
    CHECK(s == canonical_form(g));
  }
  const auto six = enumerate_instances(InstanceKind::connected_graphs, 5);
  for (std::size_t i = 0; i < six.size(); ++i)
    for (std::size_t j = i + 1; j < six.size(); ++j) CHECK_FALSE(oracle::isomorphic(oracle::matrix(six[i]), oracle::matrix(six[j])));
}

TEST_CASE("random trees and prufer decoding") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 30; ++n) CHECK(is_tree(random_tree(n, rng)));
  const std::vector<int> seq{3, 3, 3};
  CHECK(prufer_decode(seq).degree(3) == 4);
}

TEST_CASE("bit helpers") {
  CHECK(cert_size({"", "101", "1"}) == 3);
  CHECK(cert_size({"", ""}) == 0);
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(5) == 3);
  CHECK(ceil_log2(8) == 3);
  CHECK(to_binary(5) == "101");
  CHECK(to_binary(0) == "0");
  CHECK(to_binary(2, 4) == "0010");
  CHECK(parse_binary("0101") == 5u);
  CHECK_FALSE(parse_binary(""));
  CHECK_FALSE(parse_binary("12"));
  for (const Bits b : {"", "1", "0110", "101010101", "0000000"}) CHECK(from_hex(to_hex(b)) == b);
  CHECK_FALSE(from_hex("3:zz"));
  for (std::uint64_t v : {0ull, 1ull, 2ull, 7ull, 1000ull}) {
    BitWriter w;
    w.put_length(v);
    CHECK(w.bits().size() == length_prefix_size(v));
    BitReader r(w.bits());
    CHECK(r.get_length() == v);
    CHECK(r.at_end());
  }
}

TEST_CASE("configuration text and json round trip") {
  const Configuration c(cycle_graph(4), {"0", "1", "", "110"});
  const auto text = format_configuration(c);
  const auto back = parse_configuration(text);
  CHECK(back.topology() == c.topology());
  CHECK(back.inputs() == c.inputs());
  const auto j = parse_configuration(to_json(c).dump());
  CHECK(j.inputs() == c.inputs());
  CHECK(code_of([] { parse_configuration("2 1\n0 x\n"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { parse_configuration("3 1\n0 1\n"); }) == ErrorCode::disconnected);
  const CertificateVector certs{"", "1", "0101"};
  CHECK(certificates_from_json(to_json(certs)) == certs);
}
