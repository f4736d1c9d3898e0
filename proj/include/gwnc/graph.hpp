#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gwnc/errors.hpp"

namespace gwnc {

/// Unordered vertex pair, stored 0-based with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1.  Immutable after construction;
/// the edge list is kept sorted so that two equal graphs serialise identically.
/// All text I/O uses 1-based labels.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  static Graph complete(int n);
  static Graph empty(int n);
  static Graph path(int n);
  static Graph cycle(int n);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int a, int b) const;
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }
  std::vector<int> neighbours(int a) const;

  /// Non-adjacent pairs u < v in lexicographic order.
  std::vector<Edge> non_edges() const;

  Graph with_edge(const Edge& e) const;
  Graph without_edge(const Edge& e) const;
  /// Relabel: vertex order[k] of this graph becomes vertex k.
  Graph permuted(const std::vector<int>& order) const;
  Graph induced(const std::vector<int>& vertices) const;

  bool is_complete() const;

  /// "n m" header followed by one "mu nu" line per edge (1-based).
  std::string to_text() const;
  /// Compact inline form "n:4;edges:1-2,2-3".
  std::string to_inline() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<char> adj_;
};

struct ChordalityResult {
  bool chordal = false;
  /// Perfect elimination ordering: eliminating vertices in this order, the
  /// later neighbours of each vertex form a clique.
  std::optional<std::vector<int>> peo;
};

/// Maximum cardinality search (ties to the smallest label) followed by a
/// perfect-elimination check.
ChordalityResult is_chordal(const Graph& g);

/// Maximum cardinality search visit order (ties to the smallest label).
std::vector<int> maximum_cardinality_search(const Graph& g);

bool is_perfect_elimination_ordering(const Graph& g, const std::vector<int>& order);

struct CliqueDecomposition {
  std::vector<std::vector<int>> cliques;
  /// separators[k] belongs to cliques[k + 1].
  std::vector<std::vector<int>> separators;
};

/// Maximal cliques ordered so that the running-intersection property holds.
/// Throws InputError when `peo` is not a perfect elimination ordering of `g`.
CliqueDecomposition clique_decomposition(const Graph& g, const std::vector<int>& peo);
CliqueDecomposition clique_decomposition(const Graph& g);

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted, listed in
/// lexicographic order.  Isolated vertices appear as singletons.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

/// Partition of the vertices other than v1, v2 by adjacency to the pair.
struct PairClassification {
  int w = 0;  // adjacent to neither
  int x = 0;  // adjacent to v2 only
  int y = 0;  // adjacent to v1 only
  int s = 0;  // common neighbours

  friend bool operator==(const PairClassification&, const PairClassification&) = default;
};

/// Requires {v1, v2} not to be an edge of g.
PairClassification classify_pair(const Graph& g, int v1, int v2);

/// Number of common neighbours of the endpoints of an existing edge.
int common_neighbor_count(const Graph& g, const Edge& e);

/// A non-edge whose addition makes g chordal, if one exists (smallest first).
std::optional<Edge> find_chordal_completion_edge(const Graph& g);

/// Parses either the text format or the inline "n:4;edges:1-2,2-3" form.
Graph parse_graph(std::string_view text);
Graph read_graph(const std::string& path_or_inline);

/// Parses "mu-nu" (1-based) into a 0-based edge.
Edge parse_edge(std::string_view text);

}  // namespace gwnc
