#include "pqvol/ehrhart.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "pqvol/errors.hpp"

namespace pqvol {

namespace {

constexpr long kPairGuard = 10'000'000;  // candidate pairs per dilation level

// Edmonds-Karp on the tiny transportation network
//   source -> V1 (capacity = supply), V1 -> V2 along edges of H
//   (capacity = t), V2 -> sink (capacity = demand).
// Nodes: 0 = source, 1..p = V1, p+1..p+q = V2, p+q+1 = sink.
struct TransportNetwork {
  int p = 0;
  int q = 0;
  std::vector<int> head;      // per node, first edge index or -1
  std::vector<int> next;      // per edge
  std::vector<int> to;        // per edge
  std::vector<long> cap;      // per edge; edge i^1 is the residual twin
  std::vector<int> parent_edge;
  std::vector<int> queue;

  TransportNetwork(const BipartiteGraph& h) : p(h.part1_size()), q(h.part2_size()) {
    head.assign(static_cast<std::size_t>(p + q + 2), -1);
    auto add_edge = [&](int a, int b) {
      to.push_back(b);
      next.push_back(head[static_cast<std::size_t>(a)]);
      head[static_cast<std::size_t>(a)] = static_cast<int>(to.size()) - 1;
      cap.push_back(0);
      to.push_back(a);
      next.push_back(head[static_cast<std::size_t>(b)]);
      head[static_cast<std::size_t>(b)] = static_cast<int>(to.size()) - 1;
      cap.push_back(0);
    };
    for (int i = 1; i <= p; ++i) add_edge(0, i);
    for (auto [i, j] : h.edges()) add_edge(i, p + j);
    for (int j = 1; j <= q; ++j) add_edge(p + j, p + q + 1);
    parent_edge.assign(head.size(), -1);
    queue.reserve(head.size());
  }

  // Source edges were added first (edge 2k feeds V1 node k+1), sink edges
  // last, so capacities can be reset in place per query.
  bool feasible(long t, const LatticeVector& v) {
    const std::size_t m = cap.size();
    const std::size_t lane_begin = 2 * static_cast<std::size_t>(p);
    const std::size_t lane_end = m - 2 * static_cast<std::size_t>(q);
    for (std::size_t e = 0; e < lane_begin; e += 2) {
      cap[e] = v[e / 2];
      cap[e + 1] = 0;
    }
    for (std::size_t e = lane_begin; e < lane_end; e += 2) {
      cap[e] = t;
      cap[e + 1] = 0;
    }
    for (std::size_t e = lane_end; e < m; e += 2) {
      cap[e] = v[static_cast<std::size_t>(p) + (e - lane_end) / 2];
      cap[e + 1] = 0;
    }

    const int sink = p + q + 1;
    long flow = 0;
    while (flow < t) {
      std::fill(parent_edge.begin(), parent_edge.end(), -1);
      queue.clear();
      queue.push_back(0);
      bool reached = false;
      for (std::size_t qi = 0; qi < queue.size() && !reached; ++qi) {
        const int a = queue[qi];
        for (int e = head[static_cast<std::size_t>(a)]; e != -1; e = next[static_cast<std::size_t>(e)]) {
          const int b = to[static_cast<std::size_t>(e)];
          if (cap[static_cast<std::size_t>(e)] <= 0 || parent_edge[static_cast<std::size_t>(b)] != -1 || b == 0)
            continue;
          parent_edge[static_cast<std::size_t>(b)] = e;
          if (b == sink) {
            reached = true;
            break;
          }
          queue.push_back(b);
        }
      }
      if (!reached) return false;
      long push = t - flow;
      for (int b = sink; b != 0;) {
        const int e = parent_edge[static_cast<std::size_t>(b)];
        push = std::min(push, cap[static_cast<std::size_t>(e)]);
        b = to[static_cast<std::size_t>(e ^ 1)];
      }
      for (int b = sink; b != 0;) {
        const int e = parent_edge[static_cast<std::size_t>(b)];
        cap[static_cast<std::size_t>(e)] -= push;
        cap[static_cast<std::size_t>(e ^ 1)] += push;
        b = to[static_cast<std::size_t>(e ^ 1)];
      }
      flow += push;
    }
    return true;
  }
};

// Compositions of `total` into `parts` nonnegative summands, emitted in
// colexicographic order (the last coordinate varies outermost).
void compositions_colex(int total, int parts, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return;
  }
  std::vector<int> a(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int idx, int rem) -> void {
    if (idx == 0) {
      a[0] = rem;
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      a[static_cast<std::size_t>(idx)] = v;
      self(self, idx - 1, rem - v);
    }
  };
  rec(rec, parts - 1, total);
}

BigInt composition_count(long total, int parts) {
  if (parts == 0) return BigInt(total == 0 ? 1 : 0);
  return binomial(total + parts - 1, parts - 1);
}

void check_pair_guard(const RootPolytope& p, long t, const char* op) {
  const BigInt pairs = composition_count(t, p.graph().part1_size()) *
                       composition_count(t, p.graph().part2_size());
  if (pairs > kPairGuard)
    throw GuardError(std::string(op) + ": " + pairs.get_str() + " candidate pairs at dilation " +
                     std::to_string(t) + " exceed the guard of " + std::to_string(kPairGuard));
}

void check_nonempty(const RootPolytope& p, const char* op) {
  if (p.vertices().empty())
    throw std::invalid_argument(std::string(op) + ": root polytope of an edgeless graph is empty");
}

}  // namespace

RootPolytope::RootPolytope(BipartiteGraph h) : h_(std::move(h)) {
  const int dim = h_.part1_size() + h_.part2_size();
  vertices_.reserve(h_.edges().size());
  for (auto [i, j] : h_.edges()) {
    LatticeVector v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i - 1)] = 1;
    v[static_cast<std::size_t>(h_.part1_size() + j - 1)] = 1;
    vertices_.push_back(std::move(v));
  }
  std::sort(vertices_.begin(), vertices_.end());
}

std::vector<LatticeVector> pq_vertices(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<LatticeVector> out;
  out.reserve(static_cast<std::size_t>(n) + 2 * g.edges().size());
  auto point = [&](int i, int j) {
    LatticeVector v(static_cast<std::size_t>(2 * n), 0);
    v[static_cast<std::size_t>(i - 1)] = 1;
    v[static_cast<std::size_t>(n + j - 1)] = 1;
    return v;
  };
  for (int i = 1; i <= n; ++i) out.push_back(point(i, i));
  for (auto [i, j] : g.edges()) {
    out.push_back(point(i, j));
    out.push_back(point(j, i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_in_dilation(const RootPolytope& p, long t, const LatticeVector& v) {
  check_nonempty(p, "contains_in_dilation");
  const int pp = p.graph().part1_size(), qq = p.graph().part2_size();
  if (static_cast<int>(v.size()) != pp + qq)
    throw std::invalid_argument("contains_in_dilation: vector length " + std::to_string(v.size()) +
                                " != " + std::to_string(pp + qq));
  if (t < 1) throw std::invalid_argument("contains_in_dilation: dilation factor must be >= 1");
  for (long entry : v)
    if (entry < 0) throw std::invalid_argument("contains_in_dilation: negative entry");
  const long sum1 = std::accumulate(v.begin(), v.begin() + pp, 0L);
  const long sum2 = std::accumulate(v.begin() + pp, v.end(), 0L);
  if (sum1 != t || sum2 != t) return false;
  TransportNetwork net(p.graph());
  return net.feasible(t, v);
}

BigInt lattice_point_count(const RootPolytope& p, long t, unsigned threads) {
  check_nonempty(p, "lattice_point_count");
  if (t < 0) throw std::invalid_argument("lattice_point_count: negative dilation factor");
  if (t == 0) return BigInt(1);
  const int pp = p.graph().part1_size(), qq = p.graph().part2_size();
  check_pair_guard(p, t, "lattice_point_count");

  std::vector<std::vector<int>> left, right;
  compositions_colex(static_cast<int>(t), pp, left);
  compositions_colex(static_cast<int>(t), qq, right);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(left.size()) + 1);

  auto count_range = [&](std::size_t lo, std::size_t hi, long& out) {
    TransportNetwork net(p.graph());
    LatticeVector v(static_cast<std::size_t>(pp + qq), 0);
    long local = 0;
    for (std::size_t a = lo; a < hi; ++a) {
      for (int i = 0; i < pp; ++i) v[static_cast<std::size_t>(i)] = left[a][static_cast<std::size_t>(i)];
      for (const auto& b : right) {
        for (int j = 0; j < qq; ++j) v[static_cast<std::size_t>(pp + j)] = b[static_cast<std::size_t>(j)];
        if (net.feasible(t, v)) ++local;
      }
    }
    out = local;
  };

  if (threads <= 1) {
    long total = 0;
    count_range(0, left.size(), total);
    return BigInt(total);
  }
  std::vector<long> partial(threads, 0);
  std::vector<std::thread> pool;
  const std::size_t chunk = (left.size() + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t lo = std::min(left.size(), static_cast<std::size_t>(w) * chunk);
    const std::size_t hi = std::min(left.size(), lo + chunk);
    pool.emplace_back(count_range, lo, hi, std::ref(partial[w]));
  }
  for (auto& th : pool) th.join();
  long total = 0;
  for (long c : partial) total += c;
  return BigInt(total);
}

int dimension(const RootPolytope& p) {
  check_nonempty(p, "dimension");
  const auto& verts = p.vertices();
  const std::size_t dim = verts[0].size();
  // Every vertex has V1-sum and V2-sum equal to 1, so the differences
  // satisfy two independent relations and the rank is at most p + q - 2.
  const int rank_cap = std::max(0, p.graph().part1_size() + p.graph().part2_size() - 2);

  std::vector<std::vector<BigInt>> basis;  // fraction-free echelon rows
  std::vector<std::size_t> pivot_col;
  for (std::size_t r = 1; r < verts.size(); ++r) {
    std::vector<BigInt> row(dim);
    for (std::size_t c = 0; c < dim; ++c) row[c] = BigInt(verts[r][c] - verts[0][c]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::size_t c = pivot_col[b];
      if (row[c] == 0) continue;
      const BigInt factor = row[c];
      const BigInt lead = basis[b][c];
      for (std::size_t k = 0; k < dim; ++k) row[k] = row[k] * lead - basis[b][k] * factor;
      BigInt content(0);
      for (const auto& x : row) content = gcd(content, x);
      if (content > 1)
        for (auto& x : row) x /= content;
    }
    std::size_t lead_col = dim;
    for (std::size_t c = 0; c < dim; ++c)
      if (row[c] != 0) {
        lead_col = c;
        break;
      }
    if (lead_col == dim) continue;
    basis.push_back(std::move(row));
    pivot_col.push_back(lead_col);
    if (static_cast<int>(basis.size()) == rank_cap) break;
  }
  return static_cast<int>(basis.size());
}

IntPolynomial hstar_from_counts(int d, const std::vector<BigInt>& counts) {
  if (static_cast<int>(counts.size()) != d + 1)
    throw std::invalid_argument("hstar_from_counts: need counts for t = 0..d");
  std::vector<BigInt> h(static_cast<std::size_t>(d) + 1, BigInt(0));
  for (int k = 0; k <= d; ++k) {
    BigInt acc(0);
    for (int i = 0; i <= k; ++i) {
      const BigInt term = binomial(d + 1, i) * counts[static_cast<std::size_t>(k - i)];
      if (i % 2 == 0) acc += term;
      else acc -= term;
    }
    h[static_cast<std::size_t>(k)] = acc;
  }
  IntPolynomial result{std::move(h)};
  if (result.coeff(0) != 1)
    throw InternalError("hstar_from_counts: constant term is " + result.coeff(0).get_str() +
                        ", expected 1 (counting bug)");
  for (const auto& c : result.coeffs())
    if (c < 0)
      throw InternalError("hstar_from_counts: negative coefficient " + c.get_str() +
                          " (counting bug)");
  if (d >= 1 && result.coeff(1) != counts[1] - (d + 1))
    throw InternalError("hstar_from_counts: h*_1 != L(1) - (d+1) (counting bug)");
  return result;
}

IntPolynomial hstar_via_ehrhart(const Graph& g, unsigned threads) {
  RootPolytope poly(bipartite_double(g));
  const int d = dimension(poly);
  // All d+1 levels are needed, so reject infeasible instances before
  // counting anything.
  for (int t = 1; t <= d; ++t) check_pair_guard(poly, t, "hstar_via_ehrhart");
  std::vector<BigInt> counts;
  counts.reserve(static_cast<std::size_t>(d) + 1);
  for (int t = 0; t <= d; ++t) counts.push_back(lattice_point_count(poly, t, threads));
  return hstar_from_counts(d, counts);
}

}  // namespace pqvol
