#include "visipoly/cq_visibility.hpp"

#include <algorithm>

#include "visipoly/errors.hpp"

namespace visipoly {

namespace {

void check_qw(const Graph& g, const DistanceMatrix& dm, const VertexSet& q, const VertexSet& w) {
  if (dm.order() != g.order()) throw InvalidArgument("distance matrix order mismatch");
  if (q.universe_size() != g.order() || w.universe_size() != g.order())
    throw InvalidArgument("vertex set universe mismatch");
  if (q.intersects(w)) throw InvalidArgument("w must avoid q entirely");
}

void check_q(const Graph& g, const DistanceMatrix& dm, const VertexSet& q) {
  if (dm.order() != g.order()) throw InvalidArgument("distance matrix order mismatch");
  if (q.universe_size() != g.order()) throw InvalidArgument("vertex set universe mismatch");
  if (q.empty()) throw InvalidArgument("q must be nonempty");
}

// Bron-Kerbosch with pivoting over bitset-coded vertex sets of the
// compatibility graph (indices are compact labels).
struct CliqueEnumerator {
  const std::vector<VertexSet>& adj;
  std::vector<VertexSet>& out;

  void expand(VertexSet r, VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      out.push_back(std::move(r));
      return;
    }
    // Pivot: vertex of p|x with the most neighbors in p.
    int pivot = -1, best = -1;
    VertexSet px = p | x;
    for (int u = px.first(); u >= 0; u = px.next(u)) {
      const int k = (p & adj[static_cast<std::size_t>(u)]).count();
      if (k > best) {
        best = k;
        pivot = u;
      }
    }
    VertexSet cands = p - adj[static_cast<std::size_t>(pivot)];
    for (int v = cands.first(); v >= 0; v = cands.next(v)) {
      VertexSet r2 = r;
      r2.add(v);
      expand(std::move(r2), p & adj[static_cast<std::size_t>(v)],
             x & adj[static_cast<std::size_t>(v)]);
      p.remove(v);
      x.add(v);
    }
  }
};

}  // namespace

bool is_q_visible_set(const Graph& g, const DistanceMatrix& dm, const VertexSet& q,
                      const VertexSet& w) {
  check_qw(g, dm, q, w);
  for (int u = w.first(); u >= 0; u = w.next(u))
    for (int v = w.next(u); v >= 0; v = w.next(v))
      if (!is_pair_x_visible(g, dm, u, v, q)) return false;
  return true;
}

bool is_cq_visible(const Graph& g, const DistanceMatrix& dm, const VertexSet& q,
                   const VertexSet& w) {
  check_qw(g, dm, q, w);
  for (int u = q.first(); u >= 0; u = q.next(u))
    for (int v = w.first(); v >= 0; v = w.next(v))
      if (!is_pair_x_visible(g, dm, u, v, q)) return false;
  return is_q_visible_set(g, dm, q, w);
}

bool is_absolute_cq_visible(const Graph& g, const DistanceMatrix& dm, const VertexSet& q,
                            const VertexSet& w) {
  return is_mv_set(g, dm, q) && is_cq_visible(g, dm, q, w);
}

VertexSet admissible_vertices(const Graph& g, const DistanceMatrix& dm, const VertexSet& q) {
  check_q(g, dm, q);
  VertexSet out(g.order());
  const VertexSet comp = q.complement();
  for (int v = comp.first(); v >= 0; v = comp.next(v)) {
    bool ok = true;
    for (int u = q.first(); ok && u >= 0; u = q.next(u))
      ok = is_pair_x_visible(g, dm, u, v, q);
    if (ok) out.add(v);
  }
  return out;
}

CompatibilityGraph compatibility_graph(const Graph& g, const DistanceMatrix& dm,
                                       const VertexSet& q) {
  const VertexSet adm = admissible_vertices(g, dm, q);
  if (adm.empty())
    throw InvalidArgument("no admissible vertex: the compatibility graph would be empty");
  std::vector<int> labels = adm.to_vector();
  Graph cg(static_cast<int>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (is_pair_x_visible(g, dm, labels[i], labels[j], q))
        cg.add_edge(static_cast<int>(i), static_cast<int>(j));
  return CompatibilityGraph{std::move(labels), std::move(cg)};
}

GammaFamily maximal_absolute_cq_sets(const Graph& g, const DistanceMatrix& dm,
                                     const VertexSet& q) {
  check_q(g, dm, q);
  if (q.count() == g.order())
    throw InvalidArgument("q must be a proper subset of the vertex set");
  GammaFamily fam{q, {}};
  if (!is_mv_set(g, dm, q)) return fam;
  if (admissible_vertices(g, dm, q).empty()) return fam;

  CompatibilityGraph cg = compatibility_graph(g, dm, q);
  const int k = cg.graph.order();
  std::vector<VertexSet> adj;
  adj.reserve(static_cast<std::size_t>(k));
  for (int v = 0; v < k; ++v) adj.push_back(cg.graph.neighbors(v));
  std::vector<VertexSet> cliques;
  CliqueEnumerator{adj, cliques}.expand(VertexSet(k), VertexSet::full(k), VertexSet(k));

  fam.members.reserve(cliques.size());
  for (const VertexSet& cl : cliques) {
    VertexSet orig(g.order());
    for (int v = cl.first(); v >= 0; v = cl.next(v))
      orig.add(cg.labels[static_cast<std::size_t>(v)]);
    fam.members.push_back(std::move(orig));
  }
  std::sort(fam.members.begin(), fam.members.end(), VertexSet::canonical_less);
  return fam;
}

bool is_disjoint_visible(const Graph& g, const DistanceMatrix& dm, const VertexSet& q) {
  check_q(g, dm, q);
  if (q.count() == g.order()) return true;  // empty complement, nothing to collide
  const GammaFamily fam = maximal_absolute_cq_sets(g, dm, q);
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    for (std::size_t j = i + 1; j < fam.members.size(); ++j)
      if (fam.members[i].intersects(fam.members[j])) return false;
  return true;
}

ClearnessReport check_absolute_clear(const Graph& g, const DistanceMatrix& dm,
                                     const EnumerationLimits& limits) {
  const int n = g.order();
  if (n > limits.max_vertices)
    throw LimitError("absolute-clear scan over 2^" + std::to_string(n) +
                     " subsets exceeds the cap of " + std::to_string(limits.max_vertices) +
                     " vertices");
  if (dm.order() != n) throw InvalidArgument("distance matrix order mismatch");
  // Proper nonempty subsets in (size, lexicographic) order so the witness
  // reported is the canonically least one.
  std::vector<int> pick;
  for (int size = 1; size < n; ++size) {
    pick.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      VertexSet q = VertexSet::of(n, pick);
      if (!is_disjoint_visible(g, dm, q)) return ClearnessReport{false, std::move(q)};
      // next combination
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return ClearnessReport{true, std::nullopt};
}

bool is_absolute_clear(const Graph& g, const DistanceMatrix& dm,
                       const EnumerationLimits& limits) {
  return check_absolute_clear(g, dm, limits).absolute_clear;
}

}  // namespace visipoly
