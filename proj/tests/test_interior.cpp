#include "pqvol/interior.hpp"

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "pqvol/errors.hpp"
#include "pqvol/graph.hpp"
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

// Small connected bipartite graphs exercised by the property checks.
std::vector<BipartiteGraph> corpus() {
  return {
      BipartiteGraph(1, 1, {{1, 1}}),
      complete_bipartite(2, 2),
      complete_bipartite(3, 3),
      complete_bipartite(2, 3),
      bipartite_double(make_cycle(3)),
      bipartite_double(make_cycle(4)),
      bipartite_double(make_path(4)),
      bipartite_double(make_complete_multipartite({1, 3})),
      bipartite_double(Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}})),  // K4 minus an edge
      tilde(bipartite_double(make_path(3))),
  };
}

}  // namespace

TEST_CASE("is_hypertree basic cases") {
  BipartiteGraph edge(1, 1, {{1, 1}});
  CHECK(is_hypertree(edge, {0}));

  BipartiteGraph k33 = complete_bipartite(3, 3);
  CHECK(is_hypertree(k33, {2, 0, 0}));
  CHECK_FALSE(is_hypertree(k33, {3, 0, 0}));  // violates the total-sum condition
  CHECK(is_hypertree(k33, {1, 1, 0}));

  CHECK_THROWS_AS(is_hypertree(k33, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(is_hypertree(k33, {1, 1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(is_hypertree(bipartite_double(make_empty(2)), {0, 1}), DisconnectedError);
}

TEST_CASE("hypertree enumeration") {
  CHECK(hypertrees(BipartiteGraph(1, 1, {{1, 1}})) == std::vector<Hypertree>{Hypertree{{0}}});

  auto k33 = hypertrees(complete_bipartite(3, 3));
  CHECK(k33.size() == 6);
  CHECK(std::is_sorted(k33.begin(), k33.end()));

  // Wheel volume via the cone: |HT(D(C_4 + K_1))| = 3^4 - 2^4 + 1.
  auto wheel = hypertrees(bipartite_double(join({make_cycle(4), make_complete(1)})));
  CHECK(wheel.size() == 66);

  CHECK_THROWS_AS(hypertrees(bipartite_double(make_empty(2))), DisconnectedError);
}

TEST_CASE("hypertree enumeration guard is explicit") {
  std::vector<std::pair<int, int>> star_edges;
  for (int i = 1; i <= 23; ++i) star_edges.emplace_back(i, 1);
  BipartiteGraph wide(23, 1, star_edges);
  CHECK_THROWS_AS(hypertrees(wide), GuardError);
  CHECK_THROWS_AS(is_hypertree(wide, std::vector<int>(23, 0)), GuardError);
}

TEST_CASE("spanning tree oracle") {
  BipartiteGraph k22 = complete_bipartite(2, 2);
  CHECK(spanning_tree_count(k22) == 4);
  CHECK(hypertrees_via_spanning_trees(k22) ==
        std::vector<Hypertree>{Hypertree{{0, 1}}, Hypertree{{1, 0}}});

  CHECK(spanning_tree_count(complete_bipartite(3, 3)) == 81);
  CHECK(hypertrees_via_spanning_trees(complete_bipartite(3, 3)).size() == 6);

  CHECK(hypertrees_via_spanning_trees(BipartiteGraph(1, 1, {{1, 1}})) ==
        std::vector<Hypertree>{Hypertree{{0}}});
  CHECK_THROWS_AS(hypertrees_via_spanning_trees(bipartite_double(make_empty(2))),
                  DisconnectedError);
}

TEST_CASE("both hypertree routes agree on the corpus") {
  for (const auto& h : corpus()) CHECK(hypertrees(h) == hypertrees_via_spanning_trees(h));
}

TEST_CASE("internal inactivity") {
  BipartiteGraph k33 = complete_bipartite(3, 3);
  CHECK(internal_inactivity(k33, Hypertree{{2, 0, 0}}) == 0);
  CHECK(internal_inactivity(k33, Hypertree{{0, 2, 0}}) == 1);
  CHECK(internal_inactivity(k33, Hypertree{{0, 1, 1}}) == 2);
  CHECK_THROWS_AS(internal_inactivity(k33, Hypertree{{3, 0, 0}}), std::invalid_argument);

  // The inactivity of an individual hypertree does depend on the V1
  // order (only the generating function is order-invariant): (2,0,0)
  // becomes (0,0,2) when V1 is reversed.
  CHECK(internal_inactivity(k33, Hypertree{{0, 0, 2}}) == 1);
}

TEST_CASE("interior polynomial of complete bipartite graphs") {
  for (int m = 2; m <= 4; ++m)
    CHECK(interior_polynomial(complete_bipartite(m, m)) == narayana_square_poly(m));
}

TEST_CASE("interior polynomial of trees is 1") {
  CHECK(interior_polynomial(BipartiteGraph(1, 1, {{1, 1}})) == poly({1}));
  CHECK(interior_polynomial(BipartiteGraph(2, 2, {{1, 1}, {2, 1}, {2, 2}})) == poly({1}));
  CHECK(interior_polynomial(BipartiteGraph(3, 2, {{1, 1}, {2, 1}, {3, 1}, {3, 2}})) == poly({1}));
}

TEST_CASE("interior polynomial properties on the corpus") {
  for (const auto& h : corpus()) {
    IntPolynomial ip = interior_polynomial(h);

    // Constant term 1, nonnegative coefficients, degree bound.
    CHECK(ip.coeff(0) == 1);
    for (const auto& c : ip.coeffs()) CHECK(c >= 0);
    CHECK(ip.degree() <= std::min(h.part1_size(), h.part2_size()) - 1);

    // Value at 1 counts the hypertrees.
    CHECK(ip.eval(1) == BigInt(static_cast<long>(hypertrees(h).size())));

    // Well-definedness: the stored V1 order affects individual
    // inactivities but not the generating function.
    const int p = h.part1_size();
    std::vector<int> reversal(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i) reversal[static_cast<std::size_t>(i - 1)] = p + 1 - i;
    CHECK(interior_polynomial(permute_v1(h, reversal)) == ip);
    if (p >= 2) {
      std::vector<int> rotation(static_cast<std::size_t>(p));
      for (int i = 1; i <= p; ++i) rotation[static_cast<std::size_t>(i - 1)] = (i % p) + 1;
      CHECK(interior_polynomial(permute_v1(h, rotation)) == ip);
    }

    // Side swap leaves the polynomial unchanged.
    CHECK(interior_polynomial(swap_sides(h)) == ip);
  }
}

TEST_CASE("interior polynomial rejects disconnected input") {
  CHECK_THROWS_AS(interior_polynomial(bipartite_double(make_empty(3))), DisconnectedError);
}

TEST_CASE("enumeration is identical across thread counts") {
  for (const auto& h : corpus()) {
    for (unsigned threads : {2u, 5u}) {
      CHECK(hypertrees(h, threads) == hypertrees(h, 1));
      CHECK(interior_polynomial(h, threads) == interior_polynomial(h, 1));
    }
  }
}
