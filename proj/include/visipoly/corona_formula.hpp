#pragma once

#include <utility>
#include <vector>

#include "visipoly/cq_visibility.hpp"
#include "visipoly/graph.hpp"
#include "visipoly/polynomial.hpp"
#include "visipoly/visibility.hpp"

namespace visipoly {

struct CoronaFormulaLimits {
  EnumerationLimits enumeration;
  /// Inclusion-exclusion iterates 2^|Gamma_Q| subfamilies; fail loudly
  /// beyond this family size.
  int max_gamma_size = 20;
};

/// p_Q(x), the contribution of mutual-visibility sets Q union S (S drawn
/// from copies over the complement of Q) to V(G (.) H):
///   disjoint-visible Q:  sum over Omega in Gamma_Q of
///                        ((1+x)^(|Omega|*n_h) - 1) * x^|Q|
///   otherwise: inclusion-exclusion over nonempty subfamilies J of Gamma_Q,
///              (-1)^(|J|+1) * ((1+x)^(|inter J|*n_h) - 1) * x^|Q|.
/// Empty Gamma_Q gives the zero polynomial. q must be a nonempty proper
/// mutual-visibility set of g.
Polynomial p_q_polynomial(const Graph& g, const DistanceMatrix& dm, const VertexSet& q, int n_h,
                          const CoronaFormulaLimits& limits = {});

/// The inclusion-exclusion evaluation unconditionally; equals
/// p_q_polynomial whenever q is disjoint-visible (the cross terms vanish).
Polynomial p_q_polynomial_inclusion_exclusion(const Graph& g, const DistanceMatrix& dm,
                                              const VertexSet& q, int n_h,
                                              const CoronaFormulaLimits& limits = {});

/// Closed form of V(G (.) H) together with its building blocks, so each
/// per-Q contribution can be inspected independently.
struct CoronaPolyReport {
  Polynomial formula_poly;  // sum of everything below
  Polynomial v_of_g;        // V(G)
  Polynomial all_copies_term;  // (1+x)^(m*n) - 1
  Polynomial per_base_term;    // m*x*(V_2(H) - 1)
  /// p_Q(x) for every nonempty proper mutual-visibility set Q of g, in
  /// canonical Q order.
  std::vector<std::pair<VertexSet, Polynomial>> per_q_terms;
};

/// Requires |V(g)| > 1; both graphs connected.
CoronaPolyReport corona_visibility_polynomial(const Graph& g, const Graph& h,
                                              const CoronaFormulaLimits& limits = {});

/// mu(G (.) H): m*n when both orders are >= 2; for G = K_1 it is n+1 when
/// H is complete and n otherwise; for |V(H)| = 1 (and m >= 2) the closed
/// form is not established, so the value is computed by enumeration on the
/// corona itself.
int corona_mu(const Graph& g, const Graph& h, const EnumerationLimits& limits = {});

}  // namespace visipoly
