#include "visipoly/graph.hpp"

#include <algorithm>

#include "visipoly/errors.hpp"

namespace visipoly {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("graph order must be >= 1, got " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (adj_[static_cast<std::size_t>(u)].contains(v)) return;
  adj_[static_cast<std::size_t>(u)].add(v);
  adj_[static_cast<std::size_t>(v)].add(u);
  ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return u != v && adj_[static_cast<std::size_t>(u)].contains(v);
}

const VertexSet& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[static_cast<std::size_t>(u)].next(u); v >= 0;
         v = adj_[static_cast<std::size_t>(u)].next(v))
      out.emplace_back(u, v);
  return out;
}

Graph standard_graph(GraphKind kind, int n) {
  if (n < 1) throw InvalidArgument("graph order must be >= 1, got " + std::to_string(n));
  if (kind == GraphKind::cycle && n < 3)
    throw InvalidArgument("cycle requires order >= 3, got " + std::to_string(n));
  Graph g(n);
  switch (kind) {
    case GraphKind::path:
      for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
      break;
    case GraphKind::cycle:
      for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
      break;
    case GraphKind::complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
      break;
  }
  return g;
}

CoronaProduct corona(const Graph& g, const Graph& h) {
  CoronaLabeling lab{g.order(), h.order()};
  Graph c(lab.total());
  for (auto [u, v] : g.edges()) c.add_edge(lab.base(u), lab.base(v));
  for (int w = 0; w < lab.m; ++w) {
    for (auto [i, j] : h.edges()) c.add_edge(lab.copy(w, i), lab.copy(w, j));
    for (int j = 0; j < lab.n_h; ++j) c.add_edge(lab.base(w), lab.copy(w, j));
  }
  return CoronaProduct{std::move(c), lab};
}

DistanceMatrix::DistanceMatrix(int n, std::vector<int> flat)
    : n_(n), max_(0), flat_(std::move(flat)) {
  max_ = *std::max_element(flat_.begin(), flat_.end());
}

namespace {

// Level-synchronous bitset BFS. Returns the number of reached vertices and
// writes hop distances into dist (-1 for unreached).
int bfs_fill(const Graph& g, int src, std::vector<int>& dist) {
  const int n = g.order();
  dist.assign(static_cast<std::size_t>(n), -1);
  VertexSet frontier(n), visited(n), next(n);
  frontier.add(src);
  visited.add(src);
  dist[static_cast<std::size_t>(src)] = 0;
  int reached = 1;
  for (int level = 1; !frontier.empty(); ++level) {
    next.clear();
    for (int v = frontier.first(); v >= 0; v = frontier.next(v)) next |= g.neighbors(v);
    next -= visited;
    for (int v = next.first(); v >= 0; v = next.next(v)) {
      dist[static_cast<std::size_t>(v)] = level;
      ++reached;
    }
    visited |= next;
    std::swap(frontier, next);
  }
  return reached;
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  std::vector<int> flat(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> dist;
  for (int u = 0; u < n; ++u) {
    if (bfs_fill(g, u, dist) != n) {
      int other = 0;
      while (dist[static_cast<std::size_t>(other)] >= 0) ++other;
      throw DisconnectedError(u, other);
    }
    std::copy(dist.begin(), dist.end(), flat.begin() + static_cast<std::size_t>(u) * n);
  }
  return DistanceMatrix(n, std::move(flat));
}

bool is_connected(const Graph& g) {
  std::vector<int> dist;
  return bfs_fill(g, 0, dist) == g.order();
}

int induced_diameter(const Graph& g, const DistanceMatrix& dm, const VertexSet& x) {
  if (x.universe_size() != g.order() || dm.order() != g.order())
    throw InvalidArgument("induced_diameter: universe mismatch");
  if (x.empty()) throw InvalidArgument("induced_diameter of an empty vertex set");
  int best = 0;
  for (int u = x.first(); u >= 0; u = x.next(u))
    for (int v = x.next(u); v >= 0; v = x.next(v)) best = std::max(best, dm.at(u, v));
  return best;
}

}  // namespace visipoly
