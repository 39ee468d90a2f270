#pragma once

// Named generating functions C1..C20, each built exactly in Q[y][[x]].
// Forms whose published closed form divides by a non-unit or carries a surd
// are rebuilt here in an equivalent shape that stays inside the ring; the
// rewrite for each form is noted where it is built.

#include <map>
#include <string>
#include <vector>

#include "poplab/ring.hpp"
#include "poplab/series.hpp"

namespace poplab {

using CatalogParams = std::map<std::string, int>;

struct CatalogEntry {
  std::string id;
  std::string description;
  bool exponential = true;  // coefficient n carries x^n/n!
  bool bivariate = false;   // coefficients depend on y
  Series<Poly1> series;
};

/// Builds form `id` to x-order `order`. Throws on an unknown id, an unknown
/// or out-of-range parameter, or a negative order.
CatalogEntry catalog(const std::string& id, const CatalogParams& params, int order);
std::vector<std::string> catalog_ids();
/// Parameter names accepted by a form, with their defaults.
CatalogParams catalog_defaults(const std::string& id);

// Building blocks shared with the test suites.

Series<Poly1> y_series(int order);
/// Sum_{n<k} Catalan(n) x^n.
Series<Rational> catalan_partial(int k, int order);
/// Solution of P' = y(P-G_k)(P-G_l) + (G_k+G_l)P - G_k G_l, P(0) = 1, where
/// G_j = 1 + x + ... + x^{j-1}. The case l = 0 is the single-block equation.
Series<Poly1> flat_distribution_ode(int k, int l, int order);
/// The y = 0 specialisation of flat_distribution_ode.
Series<Rational> flat_avoidance_ode(int k, int l, int order);
/// P = 1 + x(y(P-P_k)(P-P_l) + P_k P + P P_l - P_k P_l) with P_j Catalan partial sums.
Series<Poly1> restricted_flat_fixpoint(int k, int l, int order);
/// The same series from the radical closed form, divided by 2xy exactly.
Series<Poly1> restricted_flat_closed(int k, int l, int order);
/// C' = (A+B)C - AB, C(0) = 1.
Series<Rational> shuffle_ode(const Series<Rational>& a, const Series<Rational>& b, int order);
/// Sum_i A_i prod_{j<i} ((x-1)A_j + 1).
Series<Rational> multi_pattern_egf(const std::vector<Series<Rational>>& blocks);
/// B / (1 - y(1 + (x-1)B)).
Series<Poly1> nonoverlap_bgf(const Series<Rational>& b);
/// B / (1 - y(1 + (kx-1)B)) for words over [k].
Series<Poly1> nonoverlap_word_bgf(const Series<Rational>& b, int k);

}  // namespace poplab
