#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "visipoly/graph.hpp"
#include "visipoly/polynomial.hpp"

namespace visipoly {

/// Caps for the exponential operations (subset enumeration, absolute-clear
/// scans). Exceeding a cap raises LimitError rather than hanging.
struct EnumerationLimits {
  int max_vertices = 24;
};

/// True iff u and v admit a geodesic whose internal vertices avoid x,
/// decided by BFS in the graph with x \ {u,v} deleted: such a geodesic
/// exists iff the masked distance still equals dm(u,v). Adjacent pairs are
/// always visible. u == v is an error.
bool is_pair_x_visible(const Graph& g, const DistanceMatrix& dm, int u, int v,
                       const VertexSet& x);

/// True iff u (not in x) is x-visible to every vertex of x; vacuously true
/// for empty x.
bool is_vertex_x_visible(const Graph& g, const DistanceMatrix& dm, int u, const VertexSet& x);

/// True iff every pair in s is s-visible. The empty set and singletons
/// qualify.
bool is_mv_set(const Graph& g, const DistanceMatrix& dm, const VertexSet& s);

/// Like is_mv_set, but returns diam_g(s) (0 for |s| <= 1) instead of true,
/// and -1 instead of false.
int mv_set_diameter(const Graph& g, const DistanceMatrix& dm, const VertexSet& s);

/// Counts of mutual-visibility sets by (size, diameter-in-g). Row k sums to
/// the coefficient r_k of the visibility polynomial. The empty set is kept
/// at (0,0) by convention.
class ThetaTable {
 public:
  ThetaTable(std::vector<std::vector<std::uint64_t>> counts);

  int mu() const { return static_cast<int>(counts_.size()) - 1; }
  int max_diameter() const { return counts_.empty() ? 0 : static_cast<int>(counts_[0].size()) - 1; }

  std::uint64_t at(int k, int d) const;

  /// r_k = sum over d of counts[k][d].
  std::uint64_t size_count(int k) const;

  Polynomial polynomial() const;

  /// V_d: counts only sets of diameter <= d (d >= diam gives the full
  /// polynomial; the constant term is always 1).
  Polynomial restricted_polynomial(int d) const;

 private:
  std::vector<std::vector<std::uint64_t>> counts_;
};

/// Called once per enumerated mutual-visibility set (the empty set
/// included, with diameter 0 by convention).
using MvSetSink = std::function<void(const VertexSet& set, int diameter)>;

/// DFS over the subset lattice in increasing-vertex order, extending a set
/// only while it remains a mutual-visibility set; correct because the
/// family is downward closed. Visits each member exactly once.
ThetaTable enumerate_mv_sets(const Graph& g, const EnumerationLimits& limits = {},
                             const MvSetSink& sink = nullptr);

/// V(G): coefficient k counts the mutual-visibility sets of size k.
Polynomial visibility_polynomial(const Graph& g, const EnumerationLimits& limits = {});

/// V_d(G). Any d >= 0 is accepted; d >= diam(G) yields V(G).
Polynomial restricted_visibility_polynomial(const Graph& g, int d,
                                            const EnumerationLimits& limits = {});

/// Mutual-visibility number = degree of V(G).
int mu(const Graph& g, const EnumerationLimits& limits = {});

/// All w such that some pair u,v (both != w) has every geodesic through w,
/// i.e. deleting w strictly increases (or disconnects) some distance.
VertexSet path_cut(const Graph& g, const DistanceMatrix& dm);

/// True iff w is a shortest-separator for every pair in a x b. Requires a,b
/// disjoint and nonempty, w outside both.
bool is_set_separator(const Graph& g, const DistanceMatrix& dm, int w, const VertexSet& a,
                      const VertexSet& b);

}  // namespace visipoly
