#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "locald/graph.hpp"
#include "locald/runtime.hpp"

namespace locald {

/// (P_{2t+1}, C_{2t+2}), both without inputs. Throws InvalidInput for t < 1.
std::pair<Configuration, Configuration> path_and_cycle(int t);

/// Nodes of a path graph from one end to the other, starting at the end with
/// the smaller index. Throws NotAPath.
std::vector<int> path_order(const GraphTopology& g);

struct SpliceResult {
  Configuration graph;
  CertificateVector certs;
  std::pair<int, int> splice_nodes;  // path positions p < q with equal windows
  std::vector<int> origin;           // result node -> path node it copies
};

/// Looks for path positions p < q whose windows p-t..p+t and q-t..q+t carry
/// equal inputs and certificates, are disjoint and keep off both path ends.
/// The result is the cycle made of two copies of positions p..q-1 joined end
/// to end, each node carrying the input and certificate of the path node it
/// copies.
/// Nothing if no such pair exists. Throws NotAPath, CertificateLengthMismatch.
std::optional<SpliceResult> splice_cycle_from_path(const Configuration& path, const CertificateVector& certs, int t);

/// Node layout: g1 is 0..|g1|-1, path node v_k (k = 1..4t+4) is |g1|+k-1,
/// g2 follows. g1 nodes get input i, g2 nodes get j, v_k gets k mod 2; v1
/// is joined to v_1 and v_{4t+4} to v2.
Configuration partition_gadget(const GraphTopology& g1, int v1, int i, const GraphTopology& g2, int v2, int j,
                               int t);

/// Index of v_k in a partition gadget whose left graph has n1 nodes.
inline int partition_path_node(int n1, int k) { return n1 + k - 1; }

struct TransplantResult {
  Configuration config;
  CertificateVector certs;
  int left = 0;   // pool index of the graph on the left, input 0
  int right = 0;  // pool index of the graph on the right, input 0
};

/// Builds accepted positive gadgets G_t(A,0,0,B,0,1) and G_t(B',0,1,A',0,0)
/// from the pool (partners of equal size, attachment node 0) and looks for
/// one of each whose certificates agree on v_{t+2}..v_{3t+3}. On a match the
/// negative gadget G_t(A,0,0,A',0,0) gets A's side and v_1..v_{2t+2} from
/// the first certificate and the rest from the second; it is returned only
/// if every node accepts under every generated id assignment.
std::optional<TransplantResult> transplant_attack(const LocalVerifier& ver, const CertificateGenerator& generate,
                                                  int t, std::span<const GraphTopology> pool,
                                                  const IdStrategy& ids = IdStrategy::standard());

/// Even path length used by the tree pair gadget: n, or n-1 for odd n.
int psi(int n);

/// Node layout: t1 is 0..n-1, path node v_k (k = 1..psi(n)) is n+k-1, t2
/// follows; v1 - v_1 and v_psi - v2 are edges (v1 - v2 when psi is 0).
/// Throws NotATree, SizeMismatch.
Configuration tree_pair_gadget(const GraphTopology& t1, int v1, const GraphTopology& t2, int v2);

/// Counting functions, logarithms base 2.
struct BoundFns {
  int t = 1;

  double k(double n) const;
  double s(double n) const;
  static double g(int n);
  static int psi(int n) { return locald::psi(n); }
  /// n^(n-2); throws InvalidInput for n < 1 or when it overflows 64 bits.
  static std::uint64_t cayley(int n);
};

}  // namespace locald
