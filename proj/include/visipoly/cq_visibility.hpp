#pragma once

#include <optional>
#include <vector>

#include "visipoly/graph.hpp"
#include "visipoly/visibility.hpp"

namespace visipoly {

// c_Q-visibility: for a subset q of V(g), a set w inside the complement of
// q is c_Q-visible when every pair of w is q-visible and every pair
// (u in q, v in w) is q-visible. "Absolute" additionally requires q itself
// to be a mutual-visibility set.

/// First clause only: every pair of w is q-visible (vacuous for |w| <= 1).
bool is_q_visible_set(const Graph& g, const DistanceMatrix& dm, const VertexSet& q,
                      const VertexSet& w);

bool is_cq_visible(const Graph& g, const DistanceMatrix& dm, const VertexSet& q,
                   const VertexSet& w);

bool is_absolute_cq_visible(const Graph& g, const DistanceMatrix& dm, const VertexSet& q,
                            const VertexSet& w);

/// { v outside q : {v} is c_Q-visible }. q must be nonempty.
VertexSet admissible_vertices(const Graph& g, const DistanceMatrix& dm, const VertexSet& q);

/// Admissible vertices relabeled densely; two vertices adjacent iff their
/// pair is q-visible. The c_Q-visible sets are exactly the cliques.
/// labels[i] is the original vertex behind graph vertex i. Requires at
/// least one admissible vertex (a Graph cannot be empty).
struct CompatibilityGraph {
  std::vector<int> labels;
  Graph graph;
};

CompatibilityGraph compatibility_graph(const Graph& g, const DistanceMatrix& dm,
                                       const VertexSet& q);

/// Gamma_Q(g): all maximal absolute c_Q-visible sets, canonically sorted
/// (by size, then lexicographic). Empty when q is not a mutual-visibility
/// set or when no vertex is admissible.
struct GammaFamily {
  VertexSet q;
  std::vector<VertexSet> members;
};

/// q must be a nonempty proper subset of V(g).
GammaFamily maximal_absolute_cq_sets(const Graph& g, const DistanceMatrix& dm,
                                     const VertexSet& q);

/// True iff the members of Gamma_Q(g) are pairwise disjoint (vacuously true
/// for <= 1 member; q = V(g) has an empty complement and passes).
bool is_disjoint_visible(const Graph& g, const DistanceMatrix& dm, const VertexSet& q);

struct ClearnessReport {
  bool absolute_clear;
  /// First non-disjoint-visible q in (size, lexicographic) order.
  std::optional<VertexSet> witness;
};

/// Scans every nonempty proper subset q of V(g); guarded by the 2^n cap.
ClearnessReport check_absolute_clear(const Graph& g, const DistanceMatrix& dm,
                                     const EnumerationLimits& limits = {});

bool is_absolute_clear(const Graph& g, const DistanceMatrix& dm,
                       const EnumerationLimits& limits = {});

}  // namespace visipoly
