#include "visipoly/visibility.hpp"

#include <algorithm>

#include "visipoly/errors.hpp"

namespace visipoly {

namespace {

// Reusable BFS buffers; visibility checks run in tight loops during
// enumeration, so steady-state calls must not allocate.
struct BfsScratch {
  VertexSet allowed, visited, frontier, next;

  void prepare(int n) {
    if (allowed.universe_size() != n) {
      allowed = VertexSet(n);
      visited = VertexSet(n);
      frontier = VertexSet(n);
      next = VertexSet(n);
    }
  }
};

thread_local BfsScratch tls_scratch;

// True iff the distance from u to v inside `allowed` equals target.
// Deleting vertices never shortens paths, so BFS can stop after `target`
// levels. `allowed` must contain u and v.
bool masked_distance_equals(const Graph& g, int u, int v, int target, BfsScratch& ws) {
  ws.visited.clear();
  ws.frontier.clear();
  ws.frontier.add(u);
  ws.visited.add(u);
  for (int level = 1; level <= target; ++level) {
    ws.next.clear();
    for (int w = ws.frontier.first(); w >= 0; w = ws.frontier.next(w)) ws.next |= g.neighbors(w);
    ws.next &= ws.allowed;
    ws.next -= ws.visited;
    if (ws.next.contains(v)) return level == target;  // cannot appear before dm(u,v)
    if (ws.next.empty()) return false;
    ws.visited |= ws.next;
    std::swap(ws.frontier, ws.next);
  }
  return false;
}

// Distances from src inside `allowed` (-1 where unreached).
void masked_bfs_distances(const Graph& g, int src, const VertexSet& allowed,
                          std::vector<int>& dist) {
  const int n = g.order();
  dist.assign(static_cast<std::size_t>(n), -1);
  VertexSet frontier(n), visited(n), next(n);
  frontier.add(src);
  visited.add(src);
  dist[static_cast<std::size_t>(src)] = 0;
  for (int level = 1; !frontier.empty(); ++level) {
    next.clear();
    for (int w = frontier.first(); w >= 0; w = frontier.next(w)) next |= g.neighbors(w);
    next &= allowed;
    next -= visited;
    for (int w = next.first(); w >= 0; w = next.next(w)) dist[static_cast<std::size_t>(w)] = level;
    visited |= next;
    std::swap(frontier, next);
  }
}

void check_inputs(const Graph& g, const DistanceMatrix& dm, const VertexSet& x) {
  if (dm.order() != g.order()) throw InvalidArgument("distance matrix order mismatch");
  if (x.universe_size() != g.order()) throw InvalidArgument("vertex set universe mismatch");
}

// Pair visibility with the caller's prepared scratch (allowed already set
// up as complement of x minus {u,v}).
bool pair_visible_prepared(const Graph& g, const DistanceMatrix& dm, int u, int v,
                           BfsScratch& ws) {
  const int d = dm.at(u, v);
  if (d == 1) return true;
  return masked_distance_equals(g, u, v, d, ws);
}

}  // namespace

bool is_pair_x_visible(const Graph& g, const DistanceMatrix& dm, int u, int v,
                       const VertexSet& x) {
  check_inputs(g, dm, x);
  if (u == v) throw InvalidArgument("pair visibility needs two distinct vertices");
  BfsScratch& ws = tls_scratch;
  ws.prepare(g.order());
  ws.allowed = x;
  ws.allowed.remove(u).remove(v);
  ws.allowed = ws.allowed.complement();
  return pair_visible_prepared(g, dm, u, v, ws);
}

bool is_vertex_x_visible(const Graph& g, const DistanceMatrix& dm, int u, const VertexSet& x) {
  check_inputs(g, dm, x);
  if (x.contains(u)) throw InvalidArgument("vertex " + std::to_string(u) + " lies in x");
  for (int v = x.first(); v >= 0; v = x.next(v))
    if (!is_pair_x_visible(g, dm, u, v, x)) return false;
  return true;
}

int mv_set_diameter(const Graph& g, const DistanceMatrix& dm, const VertexSet& s) {
  check_inputs(g, dm, s);
  BfsScratch& ws = tls_scratch;
  ws.prepare(g.order());
  int diam = 0;
  for (int u = s.first(); u >= 0; u = s.next(u)) {
    for (int v = s.next(u); v >= 0; v = s.next(v)) {
      ws.allowed = s;
      ws.allowed.remove(u).remove(v);
      ws.allowed = ws.allowed.complement();
      if (!pair_visible_prepared(g, dm, u, v, ws)) return -1;
      diam = std::max(diam, dm.at(u, v));
    }
  }
  return diam;
}

bool is_mv_set(const Graph& g, const DistanceMatrix& dm, const VertexSet& s) {
  return mv_set_diameter(g, dm, s) >= 0;
}

ThetaTable::ThetaTable(std::vector<std::vector<std::uint64_t>> counts)
    : counts_(std::move(counts)) {
  // Trim all-zero size rows so mu() is the table's top index.
  while (counts_.size() > 1 &&
         std::all_of(counts_.back().begin(), counts_.back().end(),
                     [](std::uint64_t c) { return c == 0; }))
    counts_.pop_back();
}

std::uint64_t ThetaTable::at(int k, int d) const {
  if (k < 0 || k > mu() || d < 0 || d > max_diameter()) return 0;
  return counts_[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)];
}

std::uint64_t ThetaTable::size_count(int k) const {
  if (k < 0 || k > mu()) return 0;
  std::uint64_t s = 0;
  for (std::uint64_t c : counts_[static_cast<std::size_t>(k)]) s += c;
  return s;
}

Polynomial ThetaTable::polynomial() const { return restricted_polynomial(max_diameter()); }

Polynomial ThetaTable::restricted_polynomial(int d) const {
  if (d < 0) throw InvalidArgument("diameter bound must be >= 0");
  const int dcap = std::min(d, max_diameter());
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(mu()) + 1, 0);
  for (int k = 0; k <= mu(); ++k) {
    std::uint64_t s = 0;
    for (int j = 0; j <= dcap; ++j) s += at(k, j);
    coeffs[static_cast<std::size_t>(k)] = mpz_class(static_cast<unsigned long>(s));
  }
  return Polynomial(std::move(coeffs));
}

namespace {

struct Enumerator {
  const Graph& g;
  const DistanceMatrix& dm;
  const MvSetSink& sink;
  std::vector<std::vector<std::uint64_t>>& counts;
  std::vector<int> members;
  VertexSet smask;
  BfsScratch ws;

  Enumerator(const Graph& g_, const DistanceMatrix& dm_, const MvSetSink& sink_,
             std::vector<std::vector<std::uint64_t>>& counts_)
      : g(g_), dm(dm_), sink(sink_), counts(counts_), smask(g_.order()) {
    ws.prepare(g.order());
  }

  // Full recheck of members + {v} (v already in smask): adding a vertex can
  // block geodesics of previously visible pairs, so nothing is trusted from
  // the parent set.
  bool extension_is_mv(int v) {
    for (int m : members)
      if (!pair_ok(v, m)) return false;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (!pair_ok(members[i], members[j])) return false;
    return true;
  }

  bool pair_ok(int u, int v) {
    ws.allowed = smask;
    ws.allowed.remove(u).remove(v);
    ws.allowed = ws.allowed.complement();
    return pair_visible_prepared(g, dm, u, v, ws);
  }

  void record(int diam) {
    counts[members.size()][static_cast<std::size_t>(diam)] += 1;
    if (sink) sink(smask, diam);
  }

  void extend(int diam) {
    const int n = g.order();
    for (int v = members.back() + 1; v < n; ++v) {
      smask.add(v);
      if (extension_is_mv(v)) {
        int vdiam = diam;
        for (int m : members) vdiam = std::max(vdiam, dm.at(m, v));
        members.push_back(v);
        record(vdiam);
        extend(vdiam);
        members.pop_back();
      }
      smask.remove(v);
    }
  }

  void run() {
    for (int v = 0; v < g.order(); ++v) {
      smask.add(v);
      members.push_back(v);
      record(0);
      extend(0);
      members.pop_back();
      smask.remove(v);
    }
  }
};

}  // namespace

ThetaTable enumerate_mv_sets(const Graph& g, const EnumerationLimits& limits,
                             const MvSetSink& sink) {
  const int n = g.order();
  if (n > limits.max_vertices)
    throw LimitError("enumeration over " + std::to_string(n) +
                     " vertices exceeds the cap of " + std::to_string(limits.max_vertices));
  DistanceMatrix dm = all_pairs_distances(g);
  std::vector<std::vector<std::uint64_t>> counts(
      static_cast<std::size_t>(n) + 1,
      std::vector<std::uint64_t>(static_cast<std::size_t>(dm.max_distance()) + 1, 0));
  counts[0][0] = 1;  // the empty set, diameter 0 by convention
  if (sink) sink(VertexSet(n), 0);
  Enumerator e(g, dm, sink, counts);
  e.run();
  return ThetaTable(std::move(counts));
}

Polynomial visibility_polynomial(const Graph& g, const EnumerationLimits& limits) {
  return enumerate_mv_sets(g, limits).polynomial();
}

Polynomial restricted_visibility_polynomial(const Graph& g, int d,
                                            const EnumerationLimits& limits) {
  if (d < 0) throw InvalidArgument("diameter bound must be >= 0");
  return enumerate_mv_sets(g, limits).restricted_polynomial(d);
}

int mu(const Graph& g, const EnumerationLimits& limits) {
  return enumerate_mv_sets(g, limits).mu();
}

VertexSet path_cut(const Graph& g, const DistanceMatrix& dm) {
  if (dm.order() != g.order()) throw InvalidArgument("distance matrix order mismatch");
  const int n = g.order();
  VertexSet cut(n);
  std::vector<int> dist;
  for (int w = 0; w < n; ++w) {
    VertexSet allowed = VertexSet::full(n);
    allowed.remove(w);
    bool found = false;
    for (int u = 0; u < n && !found; ++u) {
      if (u == w) continue;
      masked_bfs_distances(g, u, allowed, dist);
      for (int v = u + 1; v < n; ++v) {
        if (v == w) continue;
        const int md = dist[static_cast<std::size_t>(v)];
        if (md < 0 || md > dm.at(u, v)) {
          cut.add(w);
          found = true;
          break;
        }
      }
    }
  }
  return cut;
}

bool is_set_separator(const Graph& g, const DistanceMatrix& dm, int w, const VertexSet& a,
                      const VertexSet& b) {
  check_inputs(g, dm, a);
  check_inputs(g, dm, b);
  if (a.empty() || b.empty()) throw InvalidArgument("set separator needs nonempty sets");
  if (a.intersects(b)) throw InvalidArgument("set separator needs disjoint sets");
  if (a.contains(w) || b.contains(w))
    throw InvalidArgument("separator vertex must lie outside both sets");
  VertexSet allowed = VertexSet::full(g.order());
  allowed.remove(w);
  std::vector<int> dist;
  for (int u = a.first(); u >= 0; u = a.next(u)) {
    masked_bfs_distances(g, u, allowed, dist);
    for (int v = b.first(); v >= 0; v = b.next(v)) {
      const int md = dist[static_cast<std::size_t>(v)];
      if (md >= 0 && md <= dm.at(u, v)) return false;  // some geodesic avoids w
    }
  }
  return true;
}

}  // namespace visipoly
