#pragma once

// q-exponential series: a_n carries x^n/[n]_q!, with a_n a polynomial in y
// (outer) and q (inner). Products are Gaussian-binomial convolutions; no
// operation divides by [n]_q!.

#include <vector>

#include "poplab/ring.hpp"
#include "poplab/series.hpp"

namespace poplab {

/// [n]_q = 1 + q + ... + q^{n-1}.
Poly1 q_integer(int n);
Poly1 q_factorial(int n);
/// Rows 0..n_max of the Gaussian binomials, built by
/// [n,i] = [n-1,i-1] + q^i [n-1,i].
std::vector<std::vector<Poly1>> gauss_table(int n_max);
Poly1 gauss_binomial(int n, int i);

class QEgf {
 public:
  explicit QEgf(int order = 0);
  QEgf(std::vector<Poly2> coeffs, int order);

  static QEgf one(int order);
  /// The series x.
  static QEgf x(int order);
  /// Coefficients taken from q-polynomials (no y).
  static QEgf from_q(const std::vector<Poly1>& coeffs);

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Poly2& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  Poly2& coeff(int n) { return c_.at(static_cast<std::size_t>(n)); }
  const std::vector<Poly2>& coeffs() const noexcept { return c_; }
  QEgf truncated(int order) const;

  friend QEgf operator+(const QEgf& a, const QEgf& b);
  friend QEgf operator-(const QEgf& a, const QEgf& b);
  /// Multiplies every coefficient by a polynomial in y and q.
  friend QEgf operator*(const Poly2& s, const QEgf& a);
  friend bool operator==(const QEgf& a, const QEgf& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QEgf& a, const QEgf& b) { return !(a == b); }

 private:
  std::vector<Poly2> c_;
};

/// (fg)_n = sum_i [n,i]_q f_i g_{n-i}.
QEgf q_mul(const QEgf& f, const QEgf& g);
/// Multiplicative inverse; f_0 must be a nonzero rational.
QEgf q_inverse(const QEgf& f);
/// (1 - y b)^{-1}; requires b_0 = 0 or a constant making 1 - y b_0 a unit.
QEgf q_geom_inverse(const QEgf& b);
/// (x f)_n = [n]_q f_{n-1}; exact to order + 1.
QEgf q_x_times(const QEgf& f);

/// Substitutes q = 1 in every coefficient.
std::vector<Poly1> at_q1(const QEgf& f);
/// The ordinary exponential series in y obtained at q = 1: a_n(1) / n!.
Series<Poly1> to_egf_at_q1(const QEgf& f);

/// Substitutes q = 1 in a polynomial of y and q.
Poly1 at_q1(const Poly2& p);

}  // namespace poplab
