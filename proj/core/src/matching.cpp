#include "pqvol/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "pqvol/errors.hpp"

namespace pqvol {

namespace {

constexpr int kPmsGuard = 24;        // 2^n subset enumeration
constexpr int kGeneralPmGuard = 20;  // exhaustive matcher on non-bipartite inputs
constexpr int kMaskWidth = 64;

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  if (g.vertex_count() > kMaskWidth)
    throw GuardError("matching: " + std::to_string(g.vertex_count()) +
                     " vertices exceed the bitmask guard of " + std::to_string(kMaskWidth));
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
  for (auto [i, j] : g.edges()) {
    adj[static_cast<std::size_t>(i - 1)] |= std::uint64_t(1) << (j - 1);
    adj[static_cast<std::size_t>(j - 1)] |= std::uint64_t(1) << (i - 1);
  }
  return adj;
}

// Matchings of the induced subgraph on `avail`, counted by size. Each
// matching corresponds to exactly one leaf: the lowest available vertex is
// either left unmatched or matched to one of its available neighbors.
void count_matchings(const std::vector<std::uint64_t>& adj, std::uint64_t avail, std::size_t k,
                     std::vector<BigInt>& counts) {
  if (avail == 0) {
    counts[k] += 1;
    return;
  }
  const int v = std::countr_zero(avail);
  const std::uint64_t rest = avail & ~(std::uint64_t(1) << v);
  count_matchings(adj, rest, k, counts);
  std::uint64_t nbrs = adj[static_cast<std::size_t>(v)] & rest;
  while (nbrs != 0) {
    const int u = std::countr_zero(nbrs);
    nbrs &= nbrs - 1;
    count_matchings(adj, rest & ~(std::uint64_t(1) << u), k + 1, counts);
  }
}

// 2-coloring of the induced subgraph on `verts`; returns false if an odd
// cycle shows up. color bit set = second class.
bool two_color(const std::vector<std::uint64_t>& adj, std::uint64_t verts,
               std::uint64_t& second_class) {
  second_class = 0;
  std::uint64_t seen = 0;
  std::vector<int> stack;
  std::uint64_t todo = verts;
  while (todo != 0) {
    const int root = std::countr_zero(todo);
    seen |= std::uint64_t(1) << root;
    stack.push_back(root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      const bool v_second = (second_class >> v) & 1;
      std::uint64_t nbrs = adj[static_cast<std::size_t>(v)] & verts;
      while (nbrs != 0) {
        const int u = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        const std::uint64_t ubit = std::uint64_t(1) << u;
        if (seen & ubit) {
          if (((second_class >> u) & 1) == v_second) return false;
        } else {
          seen |= ubit;
          if (!v_second) second_class |= ubit;
          stack.push_back(u);
        }
      }
    }
    todo = verts & ~seen;
  }
  return true;
}

// Kuhn's augmenting-path matching on the induced bipartite subgraph.
struct Kuhn {
  const std::vector<std::uint64_t>& adj;
  std::uint64_t right = 0;
  std::uint64_t visited = 0;
  std::vector<int> match_of;  // right vertex -> matched left vertex or -1

  bool try_augment(int v) {
    std::uint64_t nbrs = adj[static_cast<std::size_t>(v)] & right & ~visited;
    while (nbrs != 0) {
      const int u = std::countr_zero(nbrs);
      nbrs &= nbrs - 1;
      visited |= std::uint64_t(1) << u;
      if (match_of[static_cast<std::size_t>(u)] == -1 ||
          try_augment(match_of[static_cast<std::size_t>(u)])) {
        match_of[static_cast<std::size_t>(u)] = v;
        return true;
      }
    }
    return false;
  }
};

bool bipartite_perfect_matching(const std::vector<std::uint64_t>& adj, std::uint64_t verts,
                                std::uint64_t left) {
  const std::uint64_t right = verts & ~left;
  if (std::popcount(left) != std::popcount(right)) return false;
  Kuhn kuhn{adj, right, 0, std::vector<int>(kMaskWidth, -1)};
  for (std::uint64_t todo = left; todo != 0; todo &= todo - 1) {
    kuhn.visited = 0;
    if (!kuhn.try_augment(std::countr_zero(todo))) return false;
  }
  return true;
}

// Exhaustive fallback: the lowest available vertex must be matched in any
// perfect matching, so try each of its neighbors.
bool exhaustive_perfect_matching(const std::vector<std::uint64_t>& adj, std::uint64_t avail) {
  if (avail == 0) return true;
  const int v = std::countr_zero(avail);
  const std::uint64_t rest = avail & ~(std::uint64_t(1) << v);
  std::uint64_t nbrs = adj[static_cast<std::size_t>(v)] & rest;
  while (nbrs != 0) {
    const int u = std::countr_zero(nbrs);
    nbrs &= nbrs - 1;
    if (exhaustive_perfect_matching(adj, rest & ~(std::uint64_t(1) << u))) return true;
  }
  return false;
}

bool perfect_matching_mask(const std::vector<std::uint64_t>& adj, std::uint64_t verts) {
  const int count = std::popcount(verts);
  if (count % 2 != 0) return false;
  if (count == 0) return true;
  std::uint64_t second_class = 0;
  if (two_color(adj, verts, second_class))
    return bipartite_perfect_matching(adj, verts, verts & ~second_class);
  if (count > kGeneralPmGuard)
    throw GuardError("has_perfect_matching: non-bipartite input with " + std::to_string(count) +
                     " vertices exceeds the exhaustive-search guard of " +
                     std::to_string(kGeneralPmGuard));
  return exhaustive_perfect_matching(adj, verts);
}

std::uint64_t full_mask(int n) {
  return n == kMaskWidth ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
}

}  // namespace

IntPolynomial matching_generating_polynomial(const Graph& g) {
  const auto adj = adjacency_masks(g);
  std::vector<BigInt> counts(static_cast<std::size_t>(g.vertex_count() / 2) + 1, BigInt(0));
  count_matchings(adj, full_mask(g.vertex_count()), 0, counts);
  return IntPolynomial(std::move(counts));
}

bool has_perfect_matching(const Graph& g) {
  if (g.vertex_count() % 2 != 0) return false;
  const auto adj = adjacency_masks(g);
  return perfect_matching_mask(adj, full_mask(g.vertex_count()));
}

std::vector<MatchableSet> perfectly_matchable_sets(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kPmsGuard)
    throw GuardError("perfectly_matchable_sets: " + std::to_string(n) +
                     " vertices exceed the subset enumeration guard of " +
                     std::to_string(kPmsGuard));
  const auto adj = adjacency_masks(g);
  std::vector<MatchableSet> out;
  for (std::uint64_t mask = 0;; ++mask) {
    if (std::popcount(mask) % 2 == 0 && perfect_matching_mask(adj, mask)) {
      MatchableSet s;
      s.half_size = std::popcount(mask) / 2;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) s.vertices.push_back(v + 1);
      out.push_back(std::move(s));
    }
    if (mask == full_mask(n)) break;
  }
  std::sort(out.begin(), out.end(), [](const MatchableSet& a, const MatchableSet& b) {
    if (a.half_size != b.half_size) return a.half_size < b.half_size;
    return a.vertices < b.vertices;
  });
  return out;
}

IntPolynomial pms_polynomial(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kPmsGuard)
    throw GuardError("pms_polynomial: " + std::to_string(n) +
                     " vertices exceed the subset enumeration guard of " +
                     std::to_string(kPmsGuard));
  const auto adj = adjacency_masks(g);
  std::vector<BigInt> counts(static_cast<std::size_t>(n / 2) + 1, BigInt(0));
  for (std::uint64_t mask = 0;; ++mask) {
    if (std::popcount(mask) % 2 == 0 && perfect_matching_mask(adj, mask))
      counts[static_cast<std::size_t>(std::popcount(mask) / 2)] += 1;
    if (mask == full_mask(n)) break;
  }
  return IntPolynomial(std::move(counts));
}

bool pms_polytope_contains(const BipartiteGraph& h, const std::vector<Rational>& x) {
  const int p = h.part1_size(), q = h.part2_size();
  if (static_cast<int>(x.size()) != p + q)
    throw std::invalid_argument("pms_polytope_contains: vector length " +
                                std::to_string(x.size()) + " != p + q = " + std::to_string(p + q));
  if (p > 22)
    throw GuardError("pms_polytope_contains: |V1| = " + std::to_string(p) +
                     " exceeds the subset enumeration guard of 22");
  for (const auto& xi : x)
    if (xi < 0 || xi > 1) return false;
  Rational sum1(0), sum2(0);
  for (int i = 0; i < p; ++i) sum1 += x[static_cast<std::size_t>(i)];
  for (int j = 0; j < q; ++j) sum2 += x[static_cast<std::size_t>(p + j)];
  if (sum1 != sum2) return false;

  std::vector<std::uint64_t> nb(static_cast<std::size_t>(p), 0);
  for (auto [i, j] : h.edges()) nb[static_cast<std::size_t>(i - 1)] |= std::uint64_t(1) << (j - 1);
  for (std::uint64_t s = 1; s < (std::uint64_t(1) << p); ++s) {
    Rational lhs(0);
    std::uint64_t gamma = 0;
    for (std::uint64_t bits = s; bits != 0; bits &= bits - 1) {
      const int i = std::countr_zero(bits);
      lhs += x[static_cast<std::size_t>(i)];
      gamma |= nb[static_cast<std::size_t>(i)];
    }
    Rational rhs(0);
    for (std::uint64_t bits = gamma; bits != 0; bits &= bits - 1)
      rhs += x[static_cast<std::size_t>(p + std::countr_zero(bits))];
    if (lhs > rhs) return false;
  }
  return true;
}

}  // namespace pqvol
