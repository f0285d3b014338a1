#pragma once

#include <utility>
#include <vector>

namespace pqvol {

/// Finite simple undirected graph on vertices 1..n. Edges are stored with
/// the smaller label first, sorted and deduplicated.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int i, int j) const;

  /// 1-based adjacency lists (index 0 unused), each sorted ascending.
  std::vector<std::vector<int>> adjacency() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/// Bipartite graph with an explicit ordered bipartition: part V1 has
/// vertices v_1..v_p, part V2 has v'_1..v'_q, and every edge is a pair
/// (i, j) with i indexing V1 and j indexing V2. The order of V1 is part of
/// the value: internal-activity computations depend on it, so two graphs
/// with the same edges under different V1 orders are distinct values.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int p, int q, std::vector<std::pair<int, int>> edges);

  int part1_size() const { return p_; }
  int part2_size() const { return q_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int i, int j) const;

  /// Neighbors in V2 of each V1 vertex; index 0 unused.
  std::vector<std::vector<int>> adjacency_v1() const;

  bool operator==(const BipartiteGraph&) const = default;

 private:
  int p_ = 0;
  int q_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

// Named families. Vertices are labeled 1..n throughout.
Graph make_complete(int n);
Graph make_empty(int n);
Graph make_cycle(int n);  // n >= 3
Graph make_wheel(int n);  // n >= 3; rim 1..n, hub n+1
Graph make_path(int n);   // n >= 1
Graph make_complete_multipartite(const std::vector<int>& parts);  // every part >= 1

/// Join of the parts: labels are shifted into consecutive blocks in
/// argument order, then every pair of vertices in distinct blocks is
/// connected.
Graph join(const std::vector<Graph>& parts);

/// The bipartite double D(G): V1 = V2 = 1..n, with edges (i, i) for every
/// vertex and (i, j), (j, i) for every edge {i, j} of G. Edge count is
/// n + 2|E(G)|.
BipartiteGraph bipartite_double(const Graph& g);

/// Cone construction on a bipartite graph: a new V2 vertex u adjacent to
/// all of V1 and a new V1 vertex w adjacent to all of V2 and to u. The new
/// vertices come last in their part orders, so for every graph G,
/// tilde(bipartite_double(G)) == bipartite_double(join(G, K_1)) holds as
/// an exact value, not merely up to isomorphism.
BipartiteGraph tilde(const BipartiteGraph& h);

/// Vertices of V2 adjacent to at least one vertex of s (s a set of V1
/// indices). neighborhood(h, {}) is empty.
std::vector<int> neighborhood(const BipartiteGraph& h, const std::vector<int>& s);

bool is_connected(const Graph& g);
bool is_connected(const BipartiteGraph& h);

/// Forget the bipartition: V1 keeps labels 1..p, V2 becomes p+1..p+q.
Graph to_graph(const BipartiteGraph& h);

/// Reorder V1: vertex v_i becomes v_{perm[i-1]} (perm is a permutation of
/// 1..p). The edge set is unchanged as a set; the stored V1 order changes.
BipartiteGraph permute_v1(const BipartiteGraph& h, const std::vector<int>& perm);

/// Exchange the roles of V1 and V2.
BipartiteGraph swap_sides(const BipartiteGraph& h);

}  // namespace pqvol
