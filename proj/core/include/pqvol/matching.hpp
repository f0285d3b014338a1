#pragma once

#include <vector>

#include "pqvol/bigint.hpp"
#include "pqvol/graph.hpp"
#include "pqvol/polynomial.hpp"

namespace pqvol {

/// A vertex subset whose induced subgraph has a perfect matching;
/// half_size = |vertices| / 2.
struct MatchableSet {
  std::vector<int> vertices;
  int half_size = 0;
  bool operator==(const MatchableSet&) const = default;
};

/// g(G, x) = sum_k m_G(k) x^k, where m_G(k) counts the k-matchings
/// (sets of k pairwise non-adjacent edges). Constant term 1.
IntPolynomial matching_generating_polynomial(const Graph& g);

/// True iff G has a perfect matching. Bipartite inputs are decided by
/// augmenting paths; non-bipartite inputs fall back to exhaustive search
/// and are guarded at 20 vertices.
bool has_perfect_matching(const Graph& g);

/// Every perfectly matchable set of G, the empty set included, ordered by
/// half-size then lexicographically. Enumeration guard: 24 vertices.
std::vector<MatchableSet> perfectly_matchable_sets(const Graph& g);

/// p(G, x) = sum_k |PM(G, k)| x^k. Coefficientwise p <= g, with equality
/// when G has no even cycles.
IntPolynomial pms_polynomial(const Graph& g);

/// Exact membership test for the perfectly-matchable-subgraph polytope of
/// a bipartite graph: 0 <= x_i <= 1, the two part sums agree, and
/// sum_{i in S} x_i <= sum_{j in Gamma(S)} x_j for every S in V1. The
/// vector lists V1 coordinates first, then V2.
bool pms_polytope_contains(const BipartiteGraph& h, const std::vector<Rational>& x);

}  // namespace pqvol
