#pragma once

// Truncated formal power series in x over an exact coefficient ring.
//
// A Series of order N knows the coefficients of x^0..x^N exactly. Binary
// operations take the smaller order of their operands and nothing ever claims
// knowledge past what was computed.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "poplab/error.hpp"
#include "poplab/ring.hpp"

namespace poplab {

template <class R>
class Series {
 public:
  using Traits = RingTraits<R>;
  using Coeff = R;

  explicit Series(int order = 0) : c_(static_cast<std::size_t>(check(order)) + 1, Traits::zero()) {}
  Series(std::vector<R> coeffs, int order) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(check(order)) + 1, Traits::zero());
  }

  static Series constant(R c, int order) {
    Series s(order);
    s.c_[0] = std::move(c);
    return s;
  }
  static Series one(int order) { return constant(Traits::one(), order); }
  /// x^k to the given order.
  static Series monomial(int k, int order, R c = Traits::one()) {
    Series s(order);
    if (k <= order) s.c_[static_cast<std::size_t>(k)] = std::move(c);
    return s;
  }
  static Series generate(int order, const std::function<R(int)>& f) {
    Series s(order);
    for (int n = 0; n <= order; ++n) s.c_[static_cast<std::size_t>(n)] = f(n);
    return s;
  }

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const R& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  R& coeff(int n) { return c_.at(static_cast<std::size_t>(n)); }
  const std::vector<R>& coeffs() const noexcept { return c_; }

  Series truncated(int order) const {
    if (order > this->order()) {
      throw Error("series: cannot raise order " + std::to_string(this->order()) + " to " +
                  std::to_string(order));
    }
    return Series(std::vector<R>(c_.begin(), c_.begin() + order + 1), order);
  }

  Series& operator+=(const Series& o) {
    shrink_to(o.order());
    for (int i = 0; i <= order(); ++i) c_[idx(i)] += o[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    shrink_to(o.order());
    for (int i = 0; i <= order(); ++i) c_[idx(i)] -= o[i];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) {
      if (Traits::is_zero(a[i])) continue;
      for (int j = 0; i + j <= n; ++j) r.c_[idx(i + j)] += a[i] * b[j];
    }
    return r;
  }
  friend Series operator*(const R& s, Series a) {
    for (auto& c : a.c_) c = s * c;
    return a;
  }
  Series scaled(const Rational& s) const {
    Series r = *this;
    for (auto& c : r.c_) c = Traits::scale(c, s);
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  static int check(int order) {
    if (order < 0) throw Error("series: negative order");
    return order;
  }
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }
  void shrink_to(int order) {
    if (order < this->order()) c_.resize(idx(order) + 1);
  }

  std::vector<R> c_;
};

/// f / g; the constant term of g must be a unit of the ring.
template <class R>
Series<R> divide(const Series<R>& f, const Series<R>& g) {
  using T = RingTraits<R>;
  if (!T::is_unit(g[0])) throw Error("series division: constant term is not invertible");
  const R inv0 = T::inverse(g[0]);
  const int n = std::min(f.order(), g.order());
  Series<R> h(n);
  for (int k = 0; k <= n; ++k) {
    R acc = f[k];
    for (int i = 1; i <= k; ++i) acc -= g[i] * h[k - i];
    h.coeff(k) = acc * inv0;
  }
  return h;
}

template <class R>
Series<R> inverse(const Series<R>& g) {
  return divide(Series<R>::one(g.order()), g);
}

/// x^k * f (known exactly to order + k).
template <class R>
Series<R> shift_up(const Series<R>& f, int k) {
  std::vector<R> c(static_cast<std::size_t>(k), RingTraits<R>::zero());
  c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
  return Series<R>(std::move(c), f.order() + k);
}

/// f / x^k; the first k coefficients must vanish.
template <class R>
Series<R> shift_down(const Series<R>& f, int k) {
  if (k > f.order()) throw Error("series: shift exceeds order");
  for (int i = 0; i < k; ++i) {
    if (!RingTraits<R>::is_zero(f[i])) throw Error("series: division by x^k is not exact");
  }
  return Series<R>(std::vector<R>(f.coeffs().begin() + k, f.coeffs().end()), f.order() - k);
}

template <class R>
Series<R> derivative(const Series<R>& f) {
  if (f.order() < 1) throw Error("series: derivative needs order >= 1");
  Series<R> d(f.order() - 1);
  for (int n = 1; n <= f.order(); ++n) d.coeff(n - 1) = RingTraits<R>::scale(f[n], Rational(n));
  return d;
}

/// Antiderivative with zero constant term.
template <class R>
Series<R> integral(const Series<R>& f) {
  Series<R> s(f.order() + 1);
  for (int n = 0; n <= f.order(); ++n) s.coeff(n + 1) = RingTraits<R>::scale(f[n], Rational(1, n + 1));
  return s;
}

/// f(g(x)); requires g(0) = 0.
template <class R>
Series<R> compose(const Series<R>& f, const Series<R>& g) {
  if (!RingTraits<R>::is_zero(g[0])) throw Error("series compose: inner series must vanish at 0");
  const int n = std::min(f.order(), g.order());
  Series<R> acc(n);
  const Series<R> inner = g.truncated(n);
  for (int k = n; k >= 0; --k) {
    acc = acc * inner;
    acc.coeff(0) += f[k];
  }
  return acc;
}

/// exp(f); requires f(0) = 0. Uses n e_n = sum_k k f_k e_{n-k}.
template <class R>
Series<R> exp(const Series<R>& f) {
  using T = RingTraits<R>;
  if (!T::is_zero(f[0])) throw Error("series exp: constant term must be 0");
  Series<R> e(f.order());
  e.coeff(0) = T::one();
  for (int n = 1; n <= f.order(); ++n) {
    R acc = T::zero();
    for (int k = 1; k <= n; ++k) acc += T::scale(f[k], Rational(k)) * e[n - k];
    e.coeff(n) = T::scale(acc, Rational(1, n));
  }
  return e;
}

/// Square root with constant term 1; requires f(0) = 1.
template <class R>
Series<R> sqrt(const Series<R>& f) {
  using T = RingTraits<R>;
  if (!(f[0] == T::one())) throw Error("series sqrt: constant term must be 1");
  Series<R> s(f.order());
  s.coeff(0) = T::one();
  for (int n = 1; n <= f.order(); ++n) {
    R acc = f[n];
    for (int i = 1; i < n; ++i) acc -= s[i] * s[n - i];
    s.coeff(n) = T::scale(acc, Rational(1, 2));
  }
  return s;
}

template <class R>
Series<R> power(const Series<R>& f, int k) {
  if (k < 0) return power(inverse(f), -k);
  Series<R> acc = Series<R>::one(f.order());
  for (int i = 0; i < k; ++i) acc = acc * f;
  return acc;
}

/// Coefficientwise change of ring.
template <class To, class From, class F>
Series<To> map_coeffs(const Series<From>& f, F&& fn) {
  std::vector<To> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.push_back(fn(v));
  return Series<To>(std::move(c), f.order());
}

/// Rational series viewed as constant polynomials.
template <class P>
Series<P> lift(const Series<Rational>& f) {
  return map_coeffs<P>(f, [](const Rational& r) { return P(r); });
}

// --- Rational building blocks ---------------------------------------------

Series<Rational> exp_series(const Rational& a, int order);  // e^{a x}
Series<Rational> sin_series(int order);
Series<Rational> cos_series(int order);
Series<Rational> tan_series(int order);
Series<Rational> sec_series(int order);
/// 1 + x + ... + x^{k-1} = (1 - x^k)/(1 - x).
Series<Rational> geometric_poly(int k, int order);

// --- ODE and fixed-point solvers --------------------------------------------

/// Right-hand side c0 + c1 P + c2 P^2 of P' = rhs(P).
template <class R>
struct QuadraticRhs {
  Series<R> c0;
  Series<R> c1;
  Series<R> c2;

  Series<R> operator()(const Series<R>& p) const { return c0 + c1 * p + c2 * p * p; }
};

/// Unique series with P(0) = initial and P' = rhs(P), built coefficient by
/// coefficient: (n+1) p_{n+1} = [x^n] rhs(P). The rhs coefficients must be known
/// to order - 1.
template <class R>
Series<R> ode_solve(const QuadraticRhs<R>& rhs, const R& initial, int order) {
  using T = RingTraits<R>;
  const int need = order - 1;
  if (rhs.c0.order() < need || rhs.c1.order() < need || rhs.c2.order() < need) {
    throw Error("ode_solve: right-hand side known only to lower order");
  }
  Series<R> p(order);
  p.coeff(0) = initial;
  std::vector<R> square(static_cast<std::size_t>(order) + 1, T::zero());
  for (int n = 0; n < order; ++n) {
    R sq = T::zero();
    for (int j = 0; j <= n; ++j) sq += p[j] * p[n - j];
    square[static_cast<std::size_t>(n)] = sq;
    R acc = rhs.c0[n];
    for (int i = 0; i <= n; ++i) {
      acc += rhs.c1[i] * p[n - i];
      acc += rhs.c2[i] * square[static_cast<std::size_t>(n - i)];
    }
    p.coeff(n + 1) = T::scale(acc, Rational(1, n + 1));
  }
  return p;
}

/// P' - rhs(P), to order - 1. Zero for an exact solution.
template <class R>
Series<R> ode_residual(const QuadraticRhs<R>& rhs, const Series<R>& p) {
  return derivative(p) - rhs(p.truncated(p.order() - 1));
}

/// Fixed point of P = phi(P) where [x^m] phi(P) depends only on p_0..p_{m-1}.
/// Throws if coefficient m of phi reacts to p_m (the map is not contracting).
template <class R>
Series<R> fixpoint_solve(const std::function<Series<R>(const Series<R>&)>& phi, int order) {
  using T = RingTraits<R>;
  Series<R> p(order);
  for (int m = 0; m <= order; ++m) {
    const Series<R> image = phi(p);
    Series<R> bumped = p;
    bumped.coeff(m) += T::one();
    if (!(phi(bumped)[m] == image[m])) {
      throw Error("fixpoint_solve: coefficient " + std::to_string(m) + " feeds back into itself");
    }
    p.coeff(m) = image[m];
  }
  if (!(phi(p) == p)) throw Error("fixpoint_solve: no fixed point reached");
  return p;
}

// --- Reading off counts -----------------------------------------------------

/// a_n = n! [x^n] f; throws if some a_n is not an integer.
std::vector<Integer> egf_counts(const Series<Rational>& f);
/// a_n = [x^n] f; throws if some a_n is not an integer.
std::vector<Integer> gf_counts(const Series<Rational>& f);
/// Row n lists the y-coefficients of [x^n] f, times n! when `exponential`.
std::vector<std::vector<Integer>> bgf_table(const Series<Poly1>& f, bool exponential);

Integer factorial(int n);
Integer binomial(int n, int k);

std::string series_lines(const Series<Rational>& f);
std::string series_lines(const Series<Poly1>& f);

}  // namespace poplab
