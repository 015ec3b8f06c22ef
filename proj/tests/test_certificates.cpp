#include <doctest.h>

#include <random>

#include "locald/algorithms.hpp"
#include "locald/automorphism.hpp"
#include "locald/certificates.hpp"
#include "locald/lift.hpp"
#include "locald/enumerate.hpp"
#include "locald/error.hpp"
#include "oracles.hpp"

using namespace locald;

TEST_CASE("tree code examples") {
  CHECK(encode_tree(complete_graph(2), 0).bits == "10");
  CHECK(encode_tree(path_graph(3), 1).bits == "1010");
  CHECK(encode_tree(path_graph(3), 0).bits == "1100");
  CHECK(encode_tree(GraphTopology{}, 0).bits.empty());
  CHECK_THROWS_AS(encode_tree(cycle_graph(3), 0), Error);
}

TEST_CASE("tree codes round trip on every rooted tree n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& t : enumerate_instances(InstanceKind::trees, n))
      for (int r = 0; r < n; ++r) {
        const auto code = encode_tree(t, r);
        CHECK(code.bits.size() == static_cast<std::size_t>(2 * (n - 1)));
        CHECK(code.node_count() == n);
        const auto back = decode_tree(code);
        CHECK(oracle::rooted_isomorphic(oracle::matrix(back), 0, oracle::matrix(t), r));
        CHECK(encode_tree(back, 0) == code);
        const auto rank = tree_preorder_ranks(t, r);
        CHECK(rank[r] == 0);
        CHECK(relabel(t, rank) == back);
      }
}

TEST_CASE("malformed tree codes") {
  for (const auto* bad : {"0", "1", "110", "1001", "01", "10x0"}) {
    CHECK_FALSE(try_decode_tree(bad));
    CHECK_THROWS_AS(decode_tree(TreeCode{bad}), Error);
  }
}

TEST_CASE("quotient layout") {
  const Configuration k2(complete_graph(2), {"0", "1"});
  const auto bits = encode_quotient(k2, 1);
  const auto back = decode_quotient(bits);
  CHECK(back.quotient.topology() == k2.topology());
  CHECK(back.quotient.inputs() == k2.inputs());
  CHECK(back.label == 1);
  // length(2) = 110 10, adjacency 0110, inputs (length(1) = 101, "0") and (101, "1"), label "1"
  CHECK(bits == "11010" "0110" "1010" "1011" "1");

  const Configuration tri(complete_graph(3));
  // 5 header bits, 9 adjacency bits, three 1-bit empty lengths, 2 label bits
  CHECK(quotient_code_length(tri) == 19);
  CHECK(encode_quotient(tri, 0).size() == 19);
  CHECK_THROWS_AS(encode_quotient(tri, 3), Error);
}

TEST_CASE("quotient layout round trips and stays within its size bound") {
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : enumerate_instances(InstanceKind::connected_graphs, n)) {
      std::vector<Bits> inputs;
      std::size_t longest = 0;
      for (int v = 0; v < n; ++v) {
        const int len = static_cast<int>(rng() % 4);
        inputs.push_back(len == 0 ? Bits{} : to_binary(rng() % (1u << len), len));
        longest = std::max<std::size_t>(longest, inputs.back().size());
      }
      const Configuration c(g, inputs);
      for (int label = 0; label < n; ++label) {
        const auto bits = encode_quotient(c, label);
        const auto back = try_decode_quotient(bits);
        REQUIRE(back);
        CHECK(back->quotient == c);
        CHECK(back->label == label);
        CHECK(bits.size() == quotient_code_length(c));
        const std::size_t header = length_prefix_size(static_cast<std::uint64_t>(n));
        CHECK(bits.size() <= static_cast<std::size_t>(n * n) + n * (longest + length_prefix_size(longest)) +
                                 ceil_log2(static_cast<std::uint64_t>(n)) + header);
        for (std::size_t cut = 0; cut < bits.size(); ++cut) CHECK_FALSE(try_decode_quotient(bits.substr(0, cut)));
        CHECK_FALSE(try_decode_quotient(bits + "0"));
      }
    }
}

TEST_CASE("random strings never decode to a different encoding") {
  std::mt19937_64 rng(8);
  int decoded = 0;
  for (int k = 0; k < 200000; ++k) {
    Bits s;
    const int len = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < len; ++i) s += (rng() & 1) ? '1' : '0';
    if (auto q = try_decode_quotient(s)) {
      ++decoded;
      CHECK(encode_quotient(q->quotient, q->label) == s);
    }
    if (auto t = try_decode_tree_certificate(s)) {
      const auto code = encode_tree(t->quotient.topology(), 0);
      CHECK(encode_tree_certificate(code, t->label) == s);
    }
  }
  CHECK(decoded > 0);
  CHECK_FALSE(try_decode_quotient("0"));
  CHECK_FALSE(try_decode_quotient(""));
  // two nodes without an edge
  CHECK_FALSE(try_decode_quotient("11010" "0000" "0" "0" "0"));
  // asymmetric adjacency
  CHECK_FALSE(try_decode_quotient("11010" "0100" "0" "0" "0"));
}

TEST_CASE("generator examples") {
  CHECK(make_certificate(LanguageId::tree(), Configuration(path_graph(3))) == CertificateVector{"1", "0", "1"});

  const auto fpf = make_certificate(LanguageId::fpf_symmetry_on_trees(), Configuration(complete_graph(2)));
  const auto code = encode_tree(complete_graph(2), 0);
  CHECK(std::set<Bits>(fpf.begin(), fpf.end()) ==
        std::set<Bits>{encode_tree_certificate(code, 0), encode_tree_certificate(code, 1)});

  // a 2-regular graph has no 2-node quotient, so C4 only lifts onto itself
  const Configuration c4(cycle_graph(4), {"0", "1", "0", "1"});
  const auto eq = make_certificate(LanguageId::eq_size_partition(), c4);
  for (int v = 0; v < 4; ++v) {
    const auto q = decode_quotient(eq[v]);
    CHECK(q.quotient.size() == 4);
    CHECK(graphs_isomorphic(q.quotient.topology(), cycle_graph(4)));
    CHECK(q.quotient.input(q.label) == c4.input(v));
  }
  const LiftLabeling onto_k2{Configuration(complete_graph(2), {"0", "1"}), {0, 1, 0, 1}};
  CHECK_FALSE(check_lift(c4, onto_k2, 1).global());

  const Configuration c8(cycle_graph(8), {"0", "1", "0", "1", "0", "1", "0", "1"});
  const auto eq8 = make_certificate(LanguageId::eq_size_partition(), c8);
  std::vector<int> labels;
  for (int v = 0; v < 8; ++v) {
    const auto q = decode_quotient(eq8[v]);
    CHECK(graphs_isomorphic(q.quotient.topology(), cycle_graph(4)));
    CHECK(member(LanguageId::eq_size_partition(), q.quotient));
    labels.push_back(q.label);
  }
  for (int v = 0; v < 8; ++v) CHECK(labels[v] == labels[(v + 4) % 8]);
  CHECK(run_verifier(eqsize_verifier(), c8, IdAssignment::sequential(8), eq8).global());
  CHECK(make_certificate(LanguageId::bipartite(), c4).size() == 4);
  CHECK(make_certificate(LanguageId::tree_t(1), Configuration(path_graph(3))) == CertificateVector{"", "", ""});
  try {
    make_certificate(LanguageId::tree(), Configuration(cycle_graph(4)));
    FAIL("expected NotAMember");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_member);
  }
}

TEST_CASE("tree certificate size over trees up to 64 nodes") {
  std::mt19937_64 rng(12);
  auto check_tree = [](const GraphTopology& t) {
    const auto certs = make_certificate(LanguageId::tree(), Configuration(t));
    CHECK(cert_size(certs) <= static_cast<std::size_t>(ceil_log2(static_cast<std::uint64_t>(t.size())) + 1));
  };
  for (int n = 1; n <= 8; ++n)
    for (const auto& t : enumerate_instances(InstanceKind::trees, n)) check_tree(t);
  for (int n = 2; n <= 64; ++n) {
    check_tree(path_graph(n));
    check_tree(star_graph(n - 1));
    for (int k = 0; k < 5; ++k) check_tree(random_tree(n, rng));
  }
}

TEST_CASE("fpf certificate size over members up to 8 nodes") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& c : positive_instances(LanguageId::fpf_symmetry_on_trees(), n))
      CHECK(cert_size(make_certificate(LanguageId::fpf_symmetry_on_trees(), c)) <=
            static_cast<std::size_t>(2 * n + ceil_log2(static_cast<std::uint64_t>(n)) + 16));
}

TEST_CASE("self-lift certificates are accepted by the general lift verifier") {
  const auto ver = universal_lift_verifier(LanguageId::tree(), 1);
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_instances(InstanceKind::trees, n)) {
      const Configuration c(t);
      CHECK(run_verifier(ver, c, IdAssignment::sequential(n), make_self_lift_certificate(c)).global());
      CHECK(run_verifier(fpf_trees_verifier(), c, IdAssignment::sequential(n), make_tree_lift_certificate(t)).global() ==
            member(LanguageId::fpf_symmetry_on_trees(), c));
    }
}
