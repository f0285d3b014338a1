#pragma once

#include <cstddef>
#include <vector>

#include "pqvol/graph.hpp"
#include "pqvol/polynomial.hpp"

namespace pqvol {

/// A hypertree of a connected bipartite graph H, viewed from the V1 side:
/// a vector f of nonnegative integers indexed by V1 with
///   (i)  sum f = |V2| - 1, and
///   (ii) sum_{v in S} f(v) <= |Gamma(S)| - 1 for every nonempty S in V1.
/// Equivalently, f(v) = deg_T(v) - 1 on V1 for some spanning tree T of H.
struct Hypertree {
  std::vector<int> values;
  bool operator==(const Hypertree&) const = default;
  auto operator<=>(const Hypertree&) const = default;
};

/// True iff f satisfies conditions (i) and (ii) above. Throws
/// DisconnectedError for disconnected H; std::invalid_argument for a
/// length mismatch or negative entries.
bool is_hypertree(const BipartiteGraph& h, const std::vector<int>& f);

/// All hypertrees of H in lexicographic order. Enumeration guard:
/// |V1| <= 22 and |V2| <= 64. threads parallelizes over the top-level
/// branches of the search tree (0 = one per hardware core); the output
/// order is identical for any thread count.
std::vector<Hypertree> hypertrees(const BipartiteGraph& h, unsigned threads = 1);

/// Brute-force route: enumerate every spanning tree of H and collect the
/// distinct V1 degree vectors (deg - 1), sorted lexicographically. Must
/// agree with hypertrees(); kept independent of it for cross-checking.
std::vector<Hypertree> hypertrees_via_spanning_trees(const BipartiteGraph& h);

/// Number of spanning trees of H, counted by the same enumeration that
/// backs hypertrees_via_spanning_trees.
std::size_t spanning_tree_count(const BipartiteGraph& h);

/// Number of positions j with f(v_j) > 0 such that moving one unit from
/// v_j to some earlier position v_{j'} (j' < j) leaves condition (ii)
/// intact. The V1 order of H is load-bearing here.
int internal_inactivity(const BipartiteGraph& h, const Hypertree& f);

/// I_H(x) = sum over hypertrees f of x^{internal_inactivity(f)}.
/// Degree <= min(|V1|, |V2|) - 1; constant term 1 for connected H.
/// threads as in hypertrees(); the result does not depend on it.
IntPolynomial interior_polynomial(const BipartiteGraph& h, unsigned threads = 1);

}  // namespace pqvol
