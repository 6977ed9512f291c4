#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "visipoly/cq_visibility.hpp"
#include "visipoly/errors.hpp"

using namespace visipoly;

namespace {

Graph P(int n) { return standard_graph(GraphKind::path, n); }
Graph C(int n) { return standard_graph(GraphKind::cycle, n); }
Graph K(int n) { return standard_graph(GraphKind::complete, n); }

std::vector<VertexSet> members_of(const Graph& g, const DistanceMatrix& dm, const VertexSet& q) {
  return maximal_absolute_cq_sets(g, dm, q).members;
}

}  // namespace

TEST_SUITE("cq") {

TEST_CASE("q-visible and cq-visible predicates on C8") {
  const Graph c8 = C(8);
  const DistanceMatrix dm = all_pairs_distances(c8);
  const VertexSet q = VertexSet::of(8, {0, 2});

  CHECK(is_q_visible_set(c8, dm, q, VertexSet::of(8, {4, 5, 6})));
  CHECK_FALSE(is_q_visible_set(c8, dm, q, VertexSet::of(8, {1, 4})));
  CHECK(is_q_visible_set(c8, dm, q, VertexSet::of(8, {4})));  // vacuous
  CHECK(is_q_visible_set(c8, dm, q, VertexSet(8)));

  CHECK(is_cq_visible(c8, dm, q, VertexSet::of(8, {1})));
  CHECK_FALSE(is_cq_visible(c8, dm, q, VertexSet::of(8, {3})));  // 3..0 blocked by 2
  CHECK(is_cq_visible(c8, dm, q, VertexSet(8)));                 // vacuous

  CHECK(is_absolute_cq_visible(c8, dm, q, VertexSet::of(8, {4, 5, 6})));
  CHECK_THROWS_AS(is_cq_visible(c8, dm, q, VertexSet::of(8, {0})), InvalidArgument);
}

TEST_CASE("a q that is not a mutual-visibility set is never absolute") {
  const Graph p5 = P(5);
  const DistanceMatrix dm = all_pairs_distances(p5);
  const VertexSet q = VertexSet::of(5, {0, 2, 4});  // 0..4 blocked by 2
  CHECK_FALSE(is_mv_set(p5, dm, q));
  CHECK_FALSE(is_absolute_cq_visible(p5, dm, q, VertexSet::of(5, {1})));
  CHECK(maximal_absolute_cq_sets(p5, dm, q).members.empty());
}

TEST_CASE("admissible vertices") {
  const Graph c8 = C(8);
  const DistanceMatrix dm = all_pairs_distances(c8);
  CHECK(admissible_vertices(c8, dm, VertexSet::of(8, {0, 2})) == VertexSet::of(8, {1, 4, 5, 6}));
  for (int n = 4; n <= 7; ++n) {
    const Graph k = K(n);
    const DistanceMatrix dk = all_pairs_distances(k);
    const VertexSet q = VertexSet::of(n, {0, 2});
    CHECK(admissible_vertices(k, dk, q) == q.complement());
  }
  CHECK_THROWS_AS(admissible_vertices(c8, dm, VertexSet(8)), InvalidArgument);
}

TEST_CASE("compatibility graph on C8, Q={0,2}") {
  const Graph c8 = C(8);
  const DistanceMatrix dm = all_pairs_distances(c8);
  const CompatibilityGraph cg = compatibility_graph(c8, dm, VertexSet::of(8, {0, 2}));
  CHECK(cg.labels == std::vector<int>{1, 4, 5, 6});
  // only 4-5, 5-6, 4-6 are q-visible pairs; vertex 1 is isolated
  CHECK(cg.graph.edge_count() == 3);
  CHECK(cg.graph.degree(0) == 0);
  CHECK(cg.graph.has_edge(1, 2));
  CHECK(cg.graph.has_edge(2, 3));
  CHECK(cg.graph.has_edge(1, 3));

  // single admissible vertex gives K1
  const Graph p3 = P(3);
  const DistanceMatrix dp3 = all_pairs_distances(p3);
  const CompatibilityGraph k1 = compatibility_graph(p3, dp3, VertexSet::of(3, {0, 2}));
  CHECK(k1.labels == std::vector<int>{1});
  CHECK(k1.graph.order() == 1);
}

TEST_CASE("maximal families on C8") {
  const Graph c8 = C(8);
  const DistanceMatrix dm = all_pairs_distances(c8);

  const auto f1 = members_of(c8, dm, VertexSet::of(8, {0}));
  REQUIRE(f1.size() == 3);
  CHECK(f1[0] == VertexSet::of(8, {1, 2, 3, 4, 5}));
  CHECK(f1[1] == VertexSet::of(8, {2, 3, 4, 5, 6}));
  CHECK(f1[2] == VertexSet::of(8, {3, 4, 5, 6, 7}));
  CHECK_FALSE(is_disjoint_visible(c8, dm, VertexSet::of(8, {0})));

  const auto f2 = members_of(c8, dm, VertexSet::of(8, {0, 2}));
  REQUIRE(f2.size() == 2);
  CHECK(f2[0] == VertexSet::of(8, {1}));
  CHECK(f2[1] == VertexSet::of(8, {4, 5, 6}));
  CHECK(is_disjoint_visible(c8, dm, VertexSet::of(8, {0, 2})));

  CHECK_THROWS_AS(maximal_absolute_cq_sets(c8, dm, VertexSet(8)), InvalidArgument);
  CHECK_THROWS_AS(maximal_absolute_cq_sets(c8, dm, VertexSet::full(8)), InvalidArgument);
}

TEST_CASE("cycles admit c_Q-visible sets exactly for |Q| <= 2") {
  for (int n = 3; n <= 12; ++n) {
    const Graph c = C(n);
    const DistanceMatrix dm = all_pairs_distances(c);
    // |Q| in {1,2}: some singleton is admissible
    for (int a = 0; a < n; ++a) {
      CHECK_FALSE(admissible_vertices(c, dm, VertexSet::of(n, {a})).empty());
      for (int b = a + 1; b < n; ++b)
        CHECK_FALSE(admissible_vertices(c, dm, VertexSet::of(n, {a, b})).empty());
    }
    // |Q| = 3: nothing is admissible
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int cth = b + 1; cth < n; ++cth)
          CHECK(admissible_vertices(c, dm, VertexSet::of(n, {a, b, cth})).empty());
  }
}

TEST_CASE("cycle pairs: adjacent -> unique maximal set, nonadjacent -> disjoint members") {
  for (int n = 4; n <= 10; ++n) {
    const Graph c = C(n);
    const DistanceMatrix dm = all_pairs_distances(c);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const VertexSet q = VertexSet::of(n, {a, b});
        const auto fam = members_of(c, dm, q);
        if (c.has_edge(a, b)) {
          CHECK(fam.size() == 1);
        } else {
          for (std::size_t i = 0; i < fam.size(); ++i)
            for (std::size_t j = i + 1; j < fam.size(); ++j)
              CHECK_FALSE(fam[i].intersects(fam[j]));
        }
      }
  }
}

TEST_CASE("complete graphs have the complement as unique maximal set") {
  for (int n = 3; n <= 8; ++n) {
    const Graph k = K(n);
    const DistanceMatrix dm = all_pairs_distances(k);
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      VertexSet q(n);
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) q.add(v);
      const auto fam = members_of(k, dm, q);
      REQUIRE(fam.size() == 1);
      CHECK(fam[0] == q.complement());
    }
  }
}

TEST_CASE("clique correspondence: c_Q-visible sets are the cliques over admissibles") {
  for (const Graph& g : fixtures::connected_corpus_upto(5)) {
    const int n = g.order();
    if (n < 2) continue;
    const DistanceMatrix dm = all_pairs_distances(g);
    for (unsigned qmask = 1; qmask + 1 < (1u << n); ++qmask) {
      VertexSet q(n);
      for (int v = 0; v < n; ++v)
        if ((qmask >> v) & 1) q.add(v);
      const VertexSet adm = admissible_vertices(g, dm, q);
      const VertexSet comp = q.complement();
      for (unsigned wmask = 0; wmask < (1u << n); ++wmask) {
        VertexSet w(n);
        for (int v = 0; v < n; ++v)
          if ((wmask >> v) & 1) w.add(v);
        if (!w.subset_of(comp)) continue;
        bool clique_side = w.subset_of(adm);
        if (clique_side) {
          for (int u = w.first(); clique_side && u >= 0; u = w.next(u))
            for (int v = w.next(u); clique_side && v >= 0; v = w.next(v))
              clique_side = is_pair_x_visible(g, dm, u, v, q);
        }
        CHECK(is_cq_visible(g, dm, q, w) == clique_side);
      }
    }
  }
}

TEST_CASE("subsets of c_Q-visible sets are c_Q-visible") {
  const Graph c8 = C(8);
  const DistanceMatrix dm = all_pairs_distances(c8);
  const VertexSet q = VertexSet::of(8, {0, 2});
  const VertexSet w = VertexSet::of(8, {4, 5, 6});
  REQUIRE(is_cq_visible(c8, dm, q, w));
  for (unsigned mask = 0; mask < 8; ++mask) {
    VertexSet sub(8);
    int bit = 0;
    for (int v = w.first(); v >= 0; v = w.next(v), ++bit)
      if ((mask >> bit) & 1) sub.add(v);
    CHECK(is_cq_visible(c8, dm, q, sub));
  }
}

TEST_CASE("family members are maximal and mutually incomparable") {
  const std::vector<Graph> graphs{C(8), fixtures::pendant_c5(), fixtures::clear_base()};
  for (const Graph& g : graphs) {
    const int n = g.order();
    const DistanceMatrix dm = all_pairs_distances(g);
    for (unsigned qmask = 1; qmask + 1 < (1u << n); ++qmask) {
      VertexSet q(n);
      for (int v = 0; v < n; ++v)
        if ((qmask >> v) & 1) q.add(v);
      const auto fam = members_of(g, dm, q);
      const VertexSet adm = admissible_vertices(g, dm, q);
      for (std::size_t i = 0; i < fam.size(); ++i) {
        CHECK(is_absolute_cq_visible(g, dm, q, fam[i]));
        for (std::size_t j = 0; j < fam.size(); ++j)
          if (i != j) CHECK_FALSE(fam[i].subset_of(fam[j]));
        for (int v = adm.first(); v >= 0; v = adm.next(v)) {
          if (fam[i].contains(v)) continue;
          VertexSet bigger = fam[i];
          bigger.add(v);
          CHECK_FALSE(is_cq_visible(g, dm, q, bigger));
        }
      }
    }
  }
}

TEST_CASE("pendant-C5 graph: intersecting maximal sets at Q={3,5}") {
  const Graph g = fixtures::pendant_c5();
  const DistanceMatrix dm = all_pairs_distances(g);
  const auto fam = members_of(g, dm, VertexSet::of(6, {3, 5}));
  REQUIRE(fam.size() == 2);
  CHECK(fam[0] == VertexSet::of(6, {0, 1, 2}));
  CHECK(fam[1] == VertexSet::of(6, {0, 1, 4}));
  CHECK_FALSE(is_disjoint_visible(g, dm, VertexSet::of(6, {3, 5})));
}

TEST_CASE("absolute clearness verdicts") {
  const Graph fig3 = fixtures::pendant_c5();
  const DistanceMatrix dm3 = all_pairs_distances(fig3);
  const ClearnessReport r3 = check_absolute_clear(fig3, dm3);
  CHECK_FALSE(r3.absolute_clear);
  REQUIRE(r3.witness.has_value());
  CHECK(*r3.witness == VertexSet::of(6, {0}));

  const Graph g1 = fixtures::clear_base();
  CHECK(is_absolute_clear(g1, all_pairs_distances(g1)));
  const Graph g2 = fixtures::clear_base_plus_03();
  CHECK(is_absolute_clear(g2, all_pairs_distances(g2)));
  const Graph g3 = fixtures::clear_base_plus_01();
  const DistanceMatrix dmg3 = all_pairs_distances(g3);
  const ClearnessReport rg3 = check_absolute_clear(g3, dmg3);
  CHECK_FALSE(rg3.absolute_clear);
  REQUIRE(rg3.witness.has_value());
  CHECK(*rg3.witness == VertexSet::of(5, {2}));
}

TEST_CASE("paths are absolute-clear and every q is disjoint-visible") {
  for (int n = 2; n <= 8; ++n) {
    const Graph p = P(n);
    const DistanceMatrix dm = all_pairs_distances(p);
    CHECK(is_absolute_clear(p, dm));
  }
  const Graph p6 = P(6);
  const DistanceMatrix dm6 = all_pairs_distances(p6);
  for (unsigned mask = 1; mask < (1u << 6); ++mask) {
    VertexSet q(6);
    for (int v = 0; v < 6; ++v)
      if ((mask >> v) & 1) q.add(v);
    CHECK(is_disjoint_visible(p6, dm6, q));  // includes q = V(P6)
  }
}

TEST_CASE("absolute-clear scan respects the cap") {
  EnumerationLimits limits;
  limits.max_vertices = 5;
  const Graph c6 = C(6);
  CHECK_THROWS_AS(check_absolute_clear(c6, all_pairs_distances(c6), limits), LimitError);
}

TEST_CASE("a set-separator inside a mutual-visibility set empties one side") {
  const Graph p5 = P(5);
  const DistanceMatrix dm = all_pairs_distances(p5);
  const VertexSet a = VertexSet::of(5, {0, 1});
  const VertexSet b = VertexSet::of(5, {3, 4});
  REQUIRE(is_set_separator(p5, dm, 2, a, b));
  enumerate_mv_sets(p5, {}, [&](const VertexSet& s, int) {
    if (!s.contains(2)) return;
    CHECK((!s.intersects(a) || !s.intersects(b)));
  });
}

}  // TEST_SUITE
