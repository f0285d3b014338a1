#pragma once

#include <vector>

#include "pqvol/bigint.hpp"
#include "pqvol/graph.hpp"
#include "pqvol/polynomial.hpp"

namespace pqvol {

/// Integer point in the ambient space of a root polytope; coordinates of
/// V1 come first, then V2.
using LatticeVector = std::vector<long>;

/// The root polytope of a bipartite graph H: the convex hull of
/// e_i + e_{j'} over the edges (i, j) of H, in dimension |V1| + |V2|.
/// Vertices are kept lexicographically sorted.
class RootPolytope {
 public:
  explicit RootPolytope(BipartiteGraph h);

  const BipartiteGraph& graph() const { return h_; }
  const std::vector<LatticeVector>& vertices() const { return vertices_; }
  int ambient_dimension() const { return h_.part1_size() + h_.part2_size(); }

 private:
  BipartiteGraph h_;
  std::vector<LatticeVector> vertices_;
};

/// Vertex list of the PQ-type adjacency polytope of G in R^{2n}: the n
/// diagonal points (e_i, e_i) plus (e_i, e_j) and (e_j, e_i) for every
/// edge {i, j}; n + 2|E| points, lexicographically sorted. Coincides
/// coordinate-for-coordinate with RootPolytope(bipartite_double(G)).
std::vector<LatticeVector> pq_vertices(const Graph& g);

/// Whether v lies in the t-th dilate of P (t >= 1). Decided exactly: both
/// part sums must equal t and the transportation problem with supplies
/// v|V1, demands v|V2 and lanes = edges of H must route t units, which an
/// integral max-flow settles (the flow polytope of an integral instance
/// has integral optima, so integral feasibility equals fractional
/// membership).
bool contains_in_dilation(const RootPolytope& p, long t, const LatticeVector& v);

/// |tP ∩ Z^{p+q}|, by enumerating all pairs of compositions of t over the
/// two parts and testing feasibility; L(0) = 1. Guarded: the number of
/// candidate pairs per level must not exceed 10^7. threads = 0 means one
/// thread per hardware core.
BigInt lattice_point_count(const RootPolytope& p, long t, unsigned threads = 1);

/// dim P = rank over Q of {v - v_0}, by exact fraction-free elimination.
int dimension(const RootPolytope& p);

/// The finite-difference transform from Ehrhart counts L(0..d) to h*:
/// h*_k = sum_{i=0}^{k} (-1)^i C(d+1, i) L(k-i). Verifies h*_0 = 1,
/// nonnegativity, and h*_1 = L(1) - (d+1); a violation means a counting
/// bug and raises InternalError.
IntPolynomial hstar_from_counts(int d, const std::vector<BigInt>& counts);

/// Ground-truth h*-polynomial of the PQ-type adjacency polytope of G,
/// computed from first principles via lattice-point counts of the root
/// polytope of the bipartite double.
IntPolynomial hstar_via_ehrhart(const Graph& g, unsigned threads = 1);

}  // namespace pqvol
