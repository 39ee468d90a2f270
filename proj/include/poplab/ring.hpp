#pragma once

// Exact coefficient rings: arbitrary-precision rationals and dense polynomials
// over any ring built from them (so Poly<Rational> for one variable,
// Poly<Poly<Rational>> for two).

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "poplab/error.hpp"

namespace poplab {

using Integer = mpz_class;
using Rational = mpq_class;

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static bool is_unit(const Rational& a) { return sgn(a) != 0; }
  static Rational inverse(const Rational& a) {
    if (sgn(a) == 0) throw Error("division by zero");
    return Rational(1) / a;
  }
  static Rational exact_div(const Rational& a, const Rational& b) { return a * inverse(b); }
  static Rational scale(const Rational& a, const Rational& s) { return a * s; }
  static std::string to_string(const Rational& a, const char* = "y") { return a.get_str(); }
};

/// Dense univariate polynomial with coefficients in C; c[i] multiplies var^i.
/// The coefficient vector never has trailing zeros.
template <class C>
class Poly {
 public:
  using Coeff = C;
  using Traits = RingTraits<C>;

  Poly() = default;
  Poly(int c) : Poly(C(c)) {}  // NOLINT: integer constants read naturally
  Poly(C c) {                  // NOLINT
    if (!Traits::is_zero(c)) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly variable() { return monomial(Traits::one(), 1); }
  static Poly monomial(C c, std::size_t degree) {
    std::vector<C> v(degree + 1, Traits::zero());
    v[degree] = std::move(c);
    return Poly(std::move(v));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Traits::zero(); }
  const std::vector<C>& coeffs() const noexcept { return c_; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Traits::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Traits::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, Traits::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const Rational& s) const {
    std::vector<C> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(Traits::scale(c, s));
    return Poly(std::move(r));
  }

  template <class V>
  V evaluate(const V& at) const {
    V acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + V(c_[i]);
    return acc;
  }

  /// p(q(var)).
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly(c_[i]);
    return acc;
  }

  /// Exact quotient; throws if `d` does not divide *this.
  Poly exact_div(const Poly& d) const {
    if (d.is_zero()) throw Error("polynomial division by zero");
    Poly rem = *this;
    const std::size_t dd = d.c_.size() - 1;
    if (rem.c_.size() < d.c_.size()) {
      if (!rem.is_zero()) throw Error("inexact polynomial division");
      return Poly();
    }
    std::vector<C> q(rem.c_.size() - dd, Traits::zero());
    for (std::size_t k = q.size(); k-- > 0;) {
      if (rem.c_.size() <= k + dd) continue;
      const C factor = Traits::exact_div(rem.c_[k + dd], d.c_[dd]);
      q[k] = factor;
      for (std::size_t i = 0; i <= dd; ++i) rem.c_[k + i] -= factor * d.c_[i];
      rem.trim();
    }
    if (!rem.is_zero()) throw Error("inexact polynomial division");
    return Poly(std::move(q));
  }

  std::string to_string(const char* var = "y") const;

 private:
  void trim() {
    while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

template <class C>
struct RingTraits<Poly<C>> {
  using P = Poly<C>;
  static P zero() { return P(); }
  static P one() { return P(RingTraits<C>::one()); }
  static bool is_zero(const P& a) { return a.is_zero(); }
  static bool is_unit(const P& a) { return a.degree() == 0 && RingTraits<C>::is_unit(a.coeff(0)); }
  static P inverse(const P& a) {
    if (!is_unit(a)) throw Error("polynomial is not a unit");
    return P(RingTraits<C>::inverse(a.coeff(0)));
  }
  static P exact_div(const P& a, const P& b) { return a.exact_div(b); }
  static P scale(const P& a, const Rational& s) { return a.scaled(s); }
  static std::string to_string(const P& a, const char* var = "y") { return a.to_string(var); }
};

namespace detail {
inline std::string coeff_text(const Rational& c, bool& needs_parens) {
  needs_parens = false;
  return c.get_str();
}
template <class C>
std::string coeff_text(const Poly<C>& c, bool& needs_parens) {
  needs_parens = c.coeffs().size() > 1;
  return c.to_string("q");
}
}  // namespace detail

template <class C>
std::string Poly<C>::to_string(const char* var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (RingTraits<C>::is_zero(c_[i])) continue;
    bool parens = false;
    std::string c = detail::coeff_text(c_[i], parens);
    if (!out.empty()) out += " + ";
    if (parens) c = "(" + c + ")";
    if (i == 0) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

// One variable (y or q), and two variables (y outer, q inner).
using Poly1 = Poly<Rational>;
using Poly2 = Poly<Poly1>;

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }
inline bool is_integral(const Poly1& p) {
  for (const auto& c : p.coeffs())
    if (!is_integral(c)) return false;
  return true;
}

}  // namespace poplab
