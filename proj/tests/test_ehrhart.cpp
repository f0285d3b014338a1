#include "pqvol/ehrhart.hpp"

#include <vector>

#include "doctest.h"
#include "pqvol/errors.hpp"
#include "pqvol/graph.hpp"
#include "pqvol/interior.hpp"
#include "pqvol/polynomial.hpp"

using namespace pqvol;

namespace {

IntPolynomial poly(std::vector<long> coeffs) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return IntPolynomial(std::move(big));
}

BipartiteGraph complete_bipartite(int p, int q) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= q; ++j) edges.emplace_back(i, j);
  return BipartiteGraph(p, q, edges);
}

// Every labeled graph on n vertices.
std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) slots.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < slots.size(); ++e)
      if ((mask >> e) & 1) edges.push_back(slots[e]);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace

TEST_CASE("pq_vertices structure") {
  auto k1 = pq_vertices(make_complete(1));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == LatticeVector{1, 1});

  auto k2 = pq_vertices(make_complete(2));
  CHECK(k2.size() == 4);
  for (const auto& v : k2) CHECK(v.size() == 4);
}

TEST_CASE("pq_vertices coincide with the root polytope of the double") {
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : all_graphs(n))
      CHECK(pq_vertices(g) == RootPolytope(bipartite_double(g)).vertices());
}

TEST_CASE("dilation membership") {
  RootPolytope k22(complete_bipartite(2, 2));
  for (const auto& v : k22.vertices()) CHECK(contains_in_dilation(k22, 1, v));
  CHECK(contains_in_dilation(k22, 2, {2, 0, 0, 2}));
  CHECK(contains_in_dilation(k22, 2, {1, 1, 1, 1}));
  CHECK_FALSE(contains_in_dilation(k22, 2, {2, 0, 0, 1}));  // part sums differ

  // No lane from v_1 to the second V2 vertex in D(E_2).
  RootPolytope de2(bipartite_double(make_empty(2)));
  CHECK_FALSE(contains_in_dilation(de2, 1, {1, 0, 0, 1}));
  CHECK(contains_in_dilation(de2, 1, {1, 0, 1, 0}));

  CHECK_THROWS_AS(contains_in_dilation(k22, 1, {1, -1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(contains_in_dilation(k22, 0, {0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(contains_in_dilation(k22, 1, {1, 0, 1}), std::invalid_argument);
}

TEST_CASE("lattice point counts") {
  RootPolytope k44(complete_bipartite(4, 4));
  CHECK(lattice_point_count(k44, 0) == 1);
  CHECK(lattice_point_count(k44, 1) == 16);

  RootPolytope dk2(bipartite_double(make_complete(2)));
  CHECK(lattice_point_count(dk2, 1) == 4);

  // Monotone in t, and L(1) is at least the vertex count.
  RootPolytope dc4(bipartite_double(make_cycle(4)));
  BigInt prev(0);
  for (long t = 0; t <= 4; ++t) {
    BigInt cur = lattice_point_count(dc4, t);
    CHECK(cur >= prev);
    prev = cur;
  }
  CHECK(lattice_point_count(dc4, 1) >= static_cast<long>(dc4.vertices().size()));
}

TEST_CASE("lattice point count is deterministic across thread counts") {
  RootPolytope dc4(bipartite_double(make_cycle(4)));
  for (long t = 1; t <= 4; ++t)
    CHECK(lattice_point_count(dc4, t, 1) == lattice_point_count(dc4, t, 3));
}

TEST_CASE("lattice point count guard") {
  RootPolytope k88(complete_bipartite(8, 8));
  CHECK_THROWS_AS(lattice_point_count(k88, 12), GuardError);
}

TEST_CASE("dimension by exact rank") {
  for (int m = 1; m <= 4; ++m) CHECK(dimension(RootPolytope(complete_bipartite(m, m))) == 2 * m - 2);
  CHECK(dimension(RootPolytope(BipartiteGraph(1, 1, {{1, 1}}))) == 0);
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : all_graphs(n))
      if (is_connected(g)) CHECK(dimension(RootPolytope(bipartite_double(g))) == 2 * n - 2);
  CHECK_THROWS_AS(dimension(RootPolytope(BipartiteGraph(2, 2, {}))), std::invalid_argument);
}

TEST_CASE("finite-difference transform reproduces cube h*") {
  // Control fixture: the unit k-cube has L(t) = (t+1)^k and Eulerian h*.
  CHECK(hstar_from_counts(1, {BigInt(1), BigInt(2)}) == poly({1}));
  CHECK(hstar_from_counts(2, {BigInt(1), BigInt(4), BigInt(9)}) == poly({1, 1}));
  CHECK(hstar_from_counts(3, {BigInt(1), BigInt(8), BigInt(27), BigInt(64)}) == poly({1, 4, 1}));
}

TEST_CASE("finite-difference transform rejects inconsistent counts") {
  CHECK_THROWS_AS(hstar_from_counts(1, {BigInt(2), BigInt(3)}), InternalError);   // L(0) != 1
  CHECK_THROWS_AS(hstar_from_counts(1, {BigInt(1), BigInt(0)}), InternalError);   // negative h*_1
  CHECK_THROWS_AS(hstar_from_counts(2, {BigInt(1), BigInt(4)}), std::invalid_argument);
}

TEST_CASE("hstar_via_ehrhart on small graphs") {
  CHECK(hstar_via_ehrhart(make_complete(2)) == poly({1, 1}));
  CHECK(hstar_via_ehrhart(make_complete(3)) == poly({1, 4, 1}));
  CHECK(hstar_via_ehrhart(make_wheel(3)).eval(1) == 20);
  // Disconnected graphs still have a polytope; here it is a simplex.
  CHECK(hstar_via_ehrhart(make_empty(3)) == poly({1}));
}

TEST_CASE("oracle agrees with the interior polynomial route") {
  for (const Graph& g :
       {make_complete(2), make_path(3), make_complete(3), make_cycle(4), make_complete(4)})
    CHECK(hstar_via_ehrhart(g) == interior_polynomial(bipartite_double(g)));
}
