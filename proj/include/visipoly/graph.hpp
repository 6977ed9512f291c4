#pragma once

#include <string>
#include <utility>
#include <vector>

#include "visipoly/vertex_set.hpp"

namespace visipoly {

/// Simple undirected graph on vertices 0..n-1. No self-loops; adjacency is
/// kept symmetric. Immutable once built (construction is add_edge calls
/// during setup; all algorithms take it by const reference).
class Graph {
 public:
  explicit Graph(int n);

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }

  /// Adds the undirected edge {u,v}. Idempotent; u == v is an error.
  void add_edge(int u, int v);

  bool has_edge(int u, int v) const;

  const VertexSet& neighbors(int v) const;
  int degree(int v) const { return neighbors(v).count(); }

  /// All edges as (u,v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool is_complete() const { return edge_count_ == n_ * (n_ - 1) / 2; }

 private:
  void check_vertex(int v) const;

  int n_;
  int edge_count_ = 0;
  std::vector<VertexSet> adj_;
};

enum class GraphKind { path, cycle, complete };

/// P_n (edges {i,i+1}), C_n (additionally {0,n-1}, n >= 3) or K_n.
Graph standard_graph(GraphKind kind, int n);

/// Fixed block layout for corona(G,H) vertices: the m base vertices keep
/// their indices, the j-th vertex of the copy of H attached to base w is
/// m + w*n_h + j.
struct CoronaLabeling {
  int m;    // |V(G)|
  int n_h;  // |V(H)|

  int base(int w) const { return w; }
  int copy(int w, int j) const { return m + w * n_h + j; }
  int total() const { return m * (1 + n_h); }

  bool is_base(int idx) const { return idx < m; }
  int base_of_copy(int idx) const { return (idx - m) / n_h; }
  int copy_index(int idx) const { return (idx - m) % n_h; }

  /// The m copy vertices attached to base w, as a set over the corona.
  VertexSet copy_block(int w) const {
    VertexSet s(total());
    for (int j = 0; j < n_h; ++j) s.add(copy(w, j));
    return s;
  }
};

struct CoronaProduct {
  Graph graph;
  CoronaLabeling labeling;
};

/// One copy of g plus |V(g)| copies of h, each base vertex joined to every
/// vertex of its copy.
CoronaProduct corona(const Graph& g, const Graph& h);

/// Hop distances between all vertex pairs of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> flat);

  int order() const { return n_; }
  int at(int u, int v) const { return flat_[static_cast<std::size_t>(u) * n_ + v]; }
  int max_distance() const { return max_; }  // diam(G)

 private:
  int n_;
  int max_;
  std::vector<int> flat_;
};

/// BFS from every vertex. Throws DisconnectedError (naming a vertex in each
/// of two components) when g is not connected.
DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

/// diam_g(x) = max over pairs u,v in x of d_g(u,v), measured in g itself
/// (not in the induced subgraph). x must be nonempty; singletons give 0.
int induced_diameter(const Graph& g, const DistanceMatrix& dm, const VertexSet& x);

}  // namespace visipoly
