#include "visipoly/corona_formula.hpp"

#include <algorithm>

#include "visipoly/errors.hpp"

namespace visipoly {

namespace {

bool pairwise_disjoint(const std::vector<VertexSet>& members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (members[i].intersects(members[j])) return false;
  return true;
}

GammaFamily checked_family(const Graph& g, const DistanceMatrix& dm, const VertexSet& q,
                           const CoronaFormulaLimits& limits) {
  if (q.empty()) throw InvalidArgument("p_Q needs a nonempty q");
  if (q.count() == g.order()) throw InvalidArgument("p_Q needs a proper subset q");
  if (!is_mv_set(g, dm, q))
    throw InvalidArgument("p_Q needs q to be a mutual-visibility set of g");
  GammaFamily fam = maximal_absolute_cq_sets(g, dm, q);
  if (static_cast<int>(fam.members.size()) > limits.max_gamma_size)
    throw LimitError("Gamma_Q has " + std::to_string(fam.members.size()) +
                     " members; inclusion-exclusion cap is " +
                     std::to_string(limits.max_gamma_size));
  return fam;
}

Polynomial omega_term(int omega_size, int n_h, int q_size) {
  return (binomial_power(omega_size * n_h) - Polynomial::one()).shifted(q_size);
}

// DFS over nonempty subfamilies; once an intersection is empty every
// superfamily's intersection is empty too and contributes nothing.
void ie_recurse(const std::vector<VertexSet>& members, std::size_t from,
                const VertexSet& inter, int picked, int n_h, int q_size, Polynomial& acc) {
  for (std::size_t i = from; i < members.size(); ++i) {
    VertexSet next_inter = picked == 0 ? members[i] : (inter & members[i]);
    if (next_inter.empty()) continue;
    const Polynomial term = omega_term(next_inter.count(), n_h, q_size);
    if (picked % 2 == 0)
      acc += term;
    else
      acc -= term;
    ie_recurse(members, i + 1, next_inter, picked + 1, n_h, q_size, acc);
  }
}

Polynomial ie_sum(const GammaFamily& fam, int n_h) {
  Polynomial acc;
  ie_recurse(fam.members, 0, VertexSet(), 0, n_h, fam.q.count(), acc);
  return acc;
}

Polynomial disjoint_sum(const GammaFamily& fam, int n_h) {
  Polynomial acc;
  for (const VertexSet& omega : fam.members) acc += omega_term(omega.count(), n_h, fam.q.count());
  return acc;
}

}  // namespace

Polynomial p_q_polynomial(const Graph& g, const DistanceMatrix& dm, const VertexSet& q, int n_h,
                          const CoronaFormulaLimits& limits) {
  if (n_h < 1) throw InvalidArgument("n_h must be >= 1");
  GammaFamily fam = checked_family(g, dm, q, limits);
  if (fam.members.empty()) return Polynomial();
  return pairwise_disjoint(fam.members) ? disjoint_sum(fam, n_h) : ie_sum(fam, n_h);
}

Polynomial p_q_polynomial_inclusion_exclusion(const Graph& g, const DistanceMatrix& dm,
                                              const VertexSet& q, int n_h,
                                              const CoronaFormulaLimits& limits) {
  if (n_h < 1) throw InvalidArgument("n_h must be >= 1");
  GammaFamily fam = checked_family(g, dm, q, limits);
  if (fam.members.empty()) return Polynomial();
  return ie_sum(fam, n_h);
}

CoronaPolyReport corona_visibility_polynomial(const Graph& g, const Graph& h,
                                              const CoronaFormulaLimits& limits) {
  const int m = g.order();
  const int n = h.order();
  if (m <= 1)
    throw InvalidArgument("corona visibility formula requires |V(G)| > 1, got " +
                          std::to_string(m));
  const DistanceMatrix dm = all_pairs_distances(g);

  CoronaPolyReport report;

  // Collect the proper nonempty mutual-visibility sets of g while tallying
  // V(G) from the same enumeration pass.
  std::vector<VertexSet> qs;
  ThetaTable table = enumerate_mv_sets(g, limits.enumeration, [&](const VertexSet& s, int) {
    if (!s.empty() && s.count() < m) qs.push_back(s);
  });
  report.v_of_g = table.polynomial();
  std::sort(qs.begin(), qs.end(), VertexSet::canonical_less);

  report.all_copies_term = binomial_power(m * n) - Polynomial::one();
  const Polynomial v2_h = restricted_visibility_polynomial(h, 2, limits.enumeration);
  report.per_base_term = (v2_h - Polynomial::one()).shifted(1).scaled(m);

  report.formula_poly = report.v_of_g + report.all_copies_term + report.per_base_term;
  report.per_q_terms.reserve(qs.size());
  for (const VertexSet& q : qs) {
    Polynomial pq = p_q_polynomial(g, dm, q, n, limits);
    report.formula_poly += pq;
    report.per_q_terms.emplace_back(q, std::move(pq));
  }
  return report;
}

int corona_mu(const Graph& g, const Graph& h, const EnumerationLimits& limits) {
  const int m = g.order();
  const int n = h.order();
  (void)all_pairs_distances(g);  // both factors must be connected
  (void)all_pairs_distances(h);
  if (m >= 2 && n >= 2) return m * n;
  if (m == 1) return h.is_complete() ? n + 1 : n;
  // m >= 2, n == 1: no closed form established, enumerate the corona.
  return mu(corona(g, h).graph, limits);
}

}  // namespace visipoly
