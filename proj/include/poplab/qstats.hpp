#pragma once

// Inversion-graded avoidance polynomials and coefficientwise checks of the
// q-identities that relate avoiders, quasi-avoiders and non-overlapping
// occurrences.

#include <optional>
#include <string>
#include <vector>

#include "poplab/enumerate.hpp"
#include "poplab/pattern.hpp"
#include "poplab/qseries.hpp"
#include "poplab/vendor_json.hpp"

namespace poplab {

/// Entry n is A_n(q) = sum of q^inv over S_n(patterns), n = 0..n_max.
std::vector<Poly1> q_avoiders(const std::vector<PopPattern>& patterns, int n_max,
                              const SweepOptions& opts = {});
std::vector<Poly1> q_avoiders(const PopPattern& p, int n_max, const SweepOptions& opts = {});
/// Entry n is B_n(q) over the permutations quasi-avoiding p (p segmented).
std::vector<Poly1> q_quasi_avoiders(const PopPattern& p, int n_max, const SweepOptions& opts = {});
/// Entry n is sum over S_n of y^N q^inv, N the maximum number of
/// non-overlapping occurrences of p.
std::vector<Poly2> q_nonoverlap(const PopPattern& p, int n_max, const SweepOptions& opts = {});

struct IdentityReport {
  std::string identity;
  int n_min = 0;
  int n_max = 0;
  bool passed = true;
  std::optional<int> failing_n;
  std::string expected;  // left side at the first failure
  std::string computed;  // right side at the first failure

  nlohmann::json to_json() const;
};

/// B_n = [n]_q A_{n-1} - A_n for 1 <= n <= n_max.
IdentityReport verify_lemma_B(const PopPattern& p, int n_max, const SweepOptions& opts = {});
/// A^P = A^p + A^sigma B^p for P = p-sigma, in the Gaussian-convolution ring.
IdentityReport verify_lemma_split(const PopPattern& p, const PopPattern& sigma, int n_max,
                                  const SweepOptions& opts = {});
/// A^P = sum_i A^{p_i} prod_{j<i} ((x-1)A^{p_j} + 1) for P = p_1-...-p_k.
IdentityReport verify_q_multipattern(const std::vector<PopPattern>& blocks, int n_max,
                                     const SweepOptions& opts = {});
/// sum y^N q^inv x^n/[n]_q! = A/(1 - y((x-1)A + 1)).
IdentityReport verify_q_nonoverlap(const PopPattern& p, int n_max, const SweepOptions& opts = {});

/// A^p_q(x) from its table, and B^p_q(x) = (x-1)A^p_q(x) + 1 to the same order.
QEgf q_egf(const std::vector<Poly1>& table);
QEgf quasi_from_avoiders(const QEgf& a);

}  // namespace poplab
