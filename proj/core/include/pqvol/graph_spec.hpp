#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pqvol/graph.hpp"

namespace pqvol {

/// Parsed form of the graph-spec mini-language:
///
///   K4  E3  C5  W6                 named families
///   KP:2,2,3                       complete multipartite
///   J:(C4,K1)                      join (parts may nest)
///   EL:n=5;1-2,2-3,3-4,4-5,1-5     explicit edge list
///   cone:C4                        shorthand for J:(C4,K1)
///
/// Specs are whitespace-free; parse errors name the offending token.
struct GraphSpec {
  enum class Kind { Complete, Empty, Cycle, Wheel, Multipartite, Join, EdgeList, Cone };

  Kind kind = Kind::Empty;
  int n = 0;                                  // Complete/Empty/Cycle/Wheel/EdgeList
  std::vector<int> part_sizes;                // Multipartite
  std::vector<GraphSpec> children;            // Join (>= 1), Cone (exactly 1)
  std::vector<std::pair<int, int>> edge_list; // EdgeList
  std::string text;                           // the spec as written

  Graph realize() const;

  /// The graph this spec presents as G + K_1, if it does: cone:S (base S),
  /// W_n (base C_n), or a join whose last part is a single vertex (base =
  /// join of the other parts). Empty otherwise.
  bool cone_base(Graph& base) const;
};

GraphSpec parse_graph_spec(const std::string& text);

/// Family-descriptor constructor: parses the mini-language and builds the
/// canonical labeled graph.
Graph make_graph(const std::string& spec);

/// Parsed form of a bipartite spec:
///
///   D:<graph spec>                  bipartite double of a graph
///   EL2:p=2,q=3;1-1,1-2,2-3         explicit bipartite edge list
struct BipartiteSpec {
  enum class Kind { Double, EdgeList };

  Kind kind = Kind::EdgeList;
  GraphSpec base;                             // Double
  int p = 0;
  int q = 0;
  std::vector<std::pair<int, int>> edge_list; // EdgeList
  std::string text;

  BipartiteGraph realize() const;
};

BipartiteSpec parse_bipartite_spec(const std::string& text);

}  // namespace pqvol
