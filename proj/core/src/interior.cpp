#include "pqvol/interior.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "pqvol/errors.hpp"

namespace pqvol {

namespace {

constexpr int kMaxPart1 = 22;  // condition-(ii) subset enumeration guard
constexpr int kMaxPart2 = 64;  // neighborhood bitmask width

// gamma_mask[S] is the neighborhood bitmask of the V1 subset S (bit i of S
// = vertex v_{i+1}).
struct NeighborTables {
  int p = 0;
  int q = 0;
  std::vector<std::uint64_t> gamma_mask;

  int gamma_size(std::uint32_t subset) const { return std::popcount(gamma_mask[subset]); }
};

void check_connected(const BipartiteGraph& h, const char* op) {
  if (!is_connected(h))
    throw DisconnectedError(std::string(op) + ": bipartite graph is disconnected");
}

NeighborTables build_tables(const BipartiteGraph& h, const char* op) {
  const int p = h.part1_size(), q = h.part2_size();
  if (p > kMaxPart1)
    throw GuardError(std::string(op) + ": |V1| = " + std::to_string(p) +
                     " exceeds the subset enumeration guard of " + std::to_string(kMaxPart1));
  if (q > kMaxPart2)
    throw GuardError(std::string(op) + ": |V2| = " + std::to_string(q) +
                     " exceeds the bitmask guard of " + std::to_string(kMaxPart2));
  NeighborTables t;
  t.p = p;
  t.q = q;
  t.gamma_mask.assign(std::size_t(1) << p, 0);
  for (auto [i, j] : h.edges())
    t.gamma_mask[std::size_t(1) << (i - 1)] |= std::uint64_t(1) << (j - 1);
  for (std::uint32_t m = 1; m < (std::uint32_t(1) << p); ++m) {
    std::uint32_t low = m & (~m + 1);
    if (m != low) t.gamma_mask[m] = t.gamma_mask[m & (m - 1)] | t.gamma_mask[low];
  }
  return t;
}

// Subset sums of f over V1, indexed by bitmask.
std::vector<int> subset_sums(const std::vector<int>& f) {
  const int p = static_cast<int>(f.size());
  std::vector<int> sums(std::size_t(1) << p, 0);
  for (std::uint32_t m = 1; m < (std::uint32_t(1) << p); ++m)
    sums[m] = sums[m & (m - 1)] + f[static_cast<std::size_t>(std::countr_zero(m))];
  return sums;
}

bool satisfies_condition_ii(const NeighborTables& t, const std::vector<int>& sums) {
  for (std::uint32_t m = 1; m < (std::uint32_t(1) << t.p); ++m)
    if (sums[m] > t.gamma_size(m) - 1) return false;
  return true;
}

// Whether f + e_{j'} - e_j still satisfies condition (ii); only subsets
// containing j' but not j can gain, so only those are rechecked.
bool transfer_keeps_condition_ii(const NeighborTables& t, const std::vector<int>& sums, int to,
                                 int from) {
  const std::uint32_t rest =
      ((std::uint32_t(1) << t.p) - 1) & ~(std::uint32_t(1) << from) & ~(std::uint32_t(1) << to);
  std::uint32_t sub = rest;
  while (true) {
    std::uint32_t m = sub | (std::uint32_t(1) << to);
    if (sums[m] + 1 > t.gamma_size(m) - 1) return false;
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
  return true;
}

int inactivity_with_tables(const NeighborTables& t, const std::vector<int>& f,
                           const std::vector<int>& sums) {
  int count = 0;
  for (int j = 1; j < t.p; ++j) {
    if (f[static_cast<std::size_t>(j)] == 0) continue;
    for (int jp = 0; jp < j; ++jp) {
      if (transfer_keeps_condition_ii(t, sums, jp, j)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

struct HypertreeSearch {
  const NeighborTables& t;
  std::vector<int> f;
  std::vector<int> sums;  // subset sums, filled progressively by prefix

  explicit HypertreeSearch(const NeighborTables& tables)
      : t(tables),
        f(static_cast<std::size_t>(tables.p), 0),
        sums(std::size_t(1) << tables.p, 0) {}

  // Assign f[k]..f[p-1] depth-first, value ascending, so leaves arrive in
  // lexicographic order. Condition (ii) restricted to subsets of the
  // assigned prefix is necessary for any completion, which makes the
  // incremental check a valid prune. At a leaf, sums holds the full
  // subset-sum table of f. The leaf callback receives (f, sums).
  template <typename Leaf>
  void run(int k, int assigned_sum, const Leaf& leaf) {
    if (k == t.p) {
      if (assigned_sum == t.q - 1) leaf(f, sums);
      return;
    }
    const std::uint32_t bit = std::uint32_t(1) << k;
    const int budget = t.q - 1 - assigned_sum;
    const int degree_cap = t.gamma_size(bit) - 1;
    for (int val = 0; val <= std::min(budget, degree_cap); ++val) {
      bool ok = true;
      for (std::uint32_t m = 0; m < bit; ++m) {
        int s = sums[m] + val;
        sums[m | bit] = s;
        if (s > t.gamma_size(m | bit) - 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        f[static_cast<std::size_t>(k)] = val;
        run(k + 1, assigned_sum + val, leaf);
      }
    }
    f[static_cast<std::size_t>(k)] = 0;
  }
};

// Runs the search with f[0] fixed, replicating the level-0 incremental
// check, so top-level branches can run on separate workers.
template <typename Leaf>
void run_branch(const NeighborTables& t, int first, const Leaf& leaf) {
  HypertreeSearch search(t);
  if (first > t.q - 1 || first > t.gamma_size(1) - 1) return;
  search.sums[1] = first;
  search.f[0] = first;
  search.run(1, first, leaf);
}

// Distributes the top-level branch values 0..ub round-robin across
// workers. Each branch's output is collected separately, so callers can
// merge in value order and stay deterministic.
template <typename BranchFn>
void parallel_branches(unsigned threads, int ub, const BranchFn& branch) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(ub, 0) + 1));
  if (threads <= 1) {
    for (int val = 0; val <= ub; ++val) branch(val);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (int val = static_cast<int>(w); val <= ub; val += static_cast<int>(threads))
        branch(val);
    });
  for (auto& th : pool) th.join();
}

struct Dsu {
  std::vector<int> parent;

  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

// Enumerates every spanning tree by in/out decisions over the edge list,
// pruning branches that can no longer connect the graph.
struct SpanningTreeEnumerator {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based endpoints
  std::vector<int> degree;
  std::size_t trees = 0;
  std::set<std::vector<int>>* degree_vectors = nullptr;
  int part1 = 0;

  void search(std::size_t idx, Dsu dsu, int included) {
    {
      Dsu probe = dsu;
      int components = vertices - included;
      for (std::size_t e = idx; e < edges.size(); ++e)
        if (probe.unite(edges[e].first, edges[e].second)) --components;
      if (components > 1) return;
    }
    if (included == vertices - 1) {
      ++trees;
      if (degree_vectors) {
        std::vector<int> f(degree.begin(), degree.begin() + part1);
        for (int& v : f) --v;
        degree_vectors->insert(std::move(f));
      }
      return;
    }
    auto [a, b] = edges[idx];
    Dsu with = dsu;
    if (with.unite(a, b)) {
      degree[static_cast<std::size_t>(a)]++;
      degree[static_cast<std::size_t>(b)]++;
      search(idx + 1, std::move(with), included + 1);
      degree[static_cast<std::size_t>(a)]--;
      degree[static_cast<std::size_t>(b)]--;
    }
    search(idx + 1, std::move(dsu), included);
  }
};

SpanningTreeEnumerator make_tree_enumerator(const BipartiteGraph& h) {
  SpanningTreeEnumerator e;
  e.vertices = h.part1_size() + h.part2_size();
  e.part1 = h.part1_size();
  e.degree.assign(static_cast<std::size_t>(e.vertices), 0);
  for (auto [i, j] : h.edges()) e.edges.emplace_back(i - 1, h.part1_size() + j - 1);
  return e;
}

}  // namespace

bool is_hypertree(const BipartiteGraph& h, const std::vector<int>& f) {
  check_connected(h, "is_hypertree");
  if (static_cast<int>(f.size()) != h.part1_size())
    throw std::invalid_argument("is_hypertree: vector length " + std::to_string(f.size()) +
                                " != |V1| = " + std::to_string(h.part1_size()));
  for (int v : f)
    if (v < 0) throw std::invalid_argument("is_hypertree: negative entry");
  NeighborTables t = build_tables(h, "is_hypertree");
  if (std::accumulate(f.begin(), f.end(), 0) != h.part2_size() - 1) return false;
  return satisfies_condition_ii(t, subset_sums(f));
}

std::vector<Hypertree> hypertrees(const BipartiteGraph& h, unsigned threads) {
  check_connected(h, "hypertrees");
  NeighborTables t = build_tables(h, "hypertrees");
  if (t.p == 0 || threads == 1) {
    std::vector<Hypertree> out;
    HypertreeSearch search(t);
    search.run(0, 0, [&](const std::vector<int>& f, const std::vector<int>&) {
      out.push_back(Hypertree{f});
    });
    return out;
  }
  const int ub = std::min(t.q - 1, t.gamma_size(1) - 1);
  std::vector<std::vector<Hypertree>> branches(static_cast<std::size_t>(std::max(ub, 0) + 1));
  parallel_branches(threads, ub, [&](int val) {
    run_branch(t, val, [&](const std::vector<int>& f, const std::vector<int>&) {
      branches[static_cast<std::size_t>(val)].push_back(Hypertree{f});
    });
  });
  std::vector<Hypertree> out;
  for (auto& chunk : branches)
    out.insert(out.end(), std::make_move_iterator(chunk.begin()),
               std::make_move_iterator(chunk.end()));
  return out;
}

std::vector<Hypertree> hypertrees_via_spanning_trees(const BipartiteGraph& h) {
  check_connected(h, "hypertrees_via_spanning_trees");
  std::set<std::vector<int>> vectors;
  SpanningTreeEnumerator e = make_tree_enumerator(h);
  e.degree_vectors = &vectors;
  e.search(0, Dsu(e.vertices), 0);
  std::vector<Hypertree> out;
  out.reserve(vectors.size());
  for (auto& v : vectors) out.push_back(Hypertree{v});
  return out;
}

std::size_t spanning_tree_count(const BipartiteGraph& h) {
  check_connected(h, "spanning_tree_count");
  SpanningTreeEnumerator e = make_tree_enumerator(h);
  e.search(0, Dsu(e.vertices), 0);
  return e.trees;
}

int internal_inactivity(const BipartiteGraph& h, const Hypertree& f) {
  if (!is_hypertree(h, f.values))
    throw std::invalid_argument("internal_inactivity: vector is not a hypertree of H");
  NeighborTables t = build_tables(h, "internal_inactivity");
  return inactivity_with_tables(t, f.values, subset_sums(f.values));
}

IntPolynomial interior_polynomial(const BipartiteGraph& h, unsigned threads) {
  check_connected(h, "interior_polynomial");
  NeighborTables t = build_tables(h, "interior_polynomial");
  const std::size_t width = static_cast<std::size_t>(std::max(h.part1_size(), 1));
  if (t.p == 0 || threads == 1) {
    std::vector<BigInt> coeffs(width, BigInt(0));
    HypertreeSearch search(t);
    search.run(0, 0, [&](const std::vector<int>& f, const std::vector<int>& sums) {
      coeffs[static_cast<std::size_t>(inactivity_with_tables(t, f, sums))] += 1;
    });
    return IntPolynomial(std::move(coeffs));
  }
  const int ub = std::min(t.q - 1, t.gamma_size(1) - 1);
  std::vector<std::vector<BigInt>> branches(static_cast<std::size_t>(std::max(ub, 0) + 1),
                                            std::vector<BigInt>(width, BigInt(0)));
  parallel_branches(threads, ub, [&](int val) {
    run_branch(t, val, [&](const std::vector<int>& f, const std::vector<int>& sums) {
      branches[static_cast<std::size_t>(val)]
              [static_cast<std::size_t>(inactivity_with_tables(t, f, sums))] += 1;
    });
  });
  std::vector<BigInt> coeffs(width, BigInt(0));
  for (const auto& chunk : branches)
    for (std::size_t k = 0; k < width; ++k) coeffs[k] += chunk[k];
  return IntPolynomial(std::move(coeffs));
}

}  // namespace pqvol
