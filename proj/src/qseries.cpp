#include "poplab/qseries.hpp"

#include "poplab/error.hpp"

namespace poplab {

namespace {

Poly2 lift2(const Poly1& p) { return Poly2(p); }

}  // namespace

Poly1 q_integer(int n) {
  if (n < 0) throw Error("q_integer: negative argument");
  std::vector<Rational> c(static_cast<std::size_t>(n), Rational(1));
  return Poly1(std::move(c));
}

Poly1 q_factorial(int n) {
  Poly1 acc(1);
  for (int i = 2; i <= n; ++i) acc = acc * q_integer(i);
  return acc;
}

std::vector<std::vector<Poly1>> gauss_table(int n_max) {
  std::vector<std::vector<Poly1>> rows;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Poly1> row(static_cast<std::size_t>(n) + 1);
    row[0] = Poly1(1);
    row[static_cast<std::size_t>(n)] = Poly1(1);
    for (int i = 1; i < n; ++i) {
      const auto& prev = rows[static_cast<std::size_t>(n - 1)];
      row[static_cast<std::size_t>(i)] =
          prev[static_cast<std::size_t>(i - 1)] +
          Poly1::monomial(Rational(1), static_cast<std::size_t>(i)) * prev[static_cast<std::size_t>(i)];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Poly1 gauss_binomial(int n, int i) {
  if (n < 0 || i < 0 || i > n) return Poly1();
  return gauss_table(n)[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

QEgf::QEgf(int order) {
  if (order < 0) throw Error("q-series: negative order");
  c_.assign(static_cast<std::size_t>(order) + 1, Poly2());
}

QEgf::QEgf(std::vector<Poly2> coeffs, int order) : c_(std::move(coeffs)) {
  if (order < 0) throw Error("q-series: negative order");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

QEgf QEgf::one(int order) {
  QEgf r(order);
  r.c_[0] = Poly2(1);
  return r;
}

QEgf QEgf::x(int order) {
  QEgf r(order);
  if (order >= 1) r.c_[1] = Poly2(1);
  return r;
}

QEgf QEgf::from_q(const std::vector<Poly1>& coeffs) {
  if (coeffs.empty()) throw Error("q-series: no coefficients");
  std::vector<Poly2> c;
  for (const auto& p : coeffs) c.push_back(lift2(p));
  return QEgf(std::move(c), static_cast<int>(coeffs.size()) - 1);
}

QEgf QEgf::truncated(int order) const {
  if (order > this->order()) throw Error("q-series: cannot raise order");
  return QEgf(std::vector<Poly2>(c_.begin(), c_.begin() + order + 1), order);
}

QEgf operator+(const QEgf& a, const QEgf& b) {
  const int n = std::min(a.order(), b.order());
  QEgf r(n);
  for (int i = 0; i <= n; ++i) r.coeff(i) = a[i] + b[i];
  return r;
}

QEgf operator-(const QEgf& a, const QEgf& b) {
  const int n = std::min(a.order(), b.order());
  QEgf r(n);
  for (int i = 0; i <= n; ++i) r.coeff(i) = a[i] - b[i];
  return r;
}

QEgf operator*(const Poly2& s, const QEgf& a) {
  QEgf r(a.order());
  for (int i = 0; i <= a.order(); ++i) r.coeff(i) = s * a[i];
  return r;
}

QEgf q_mul(const QEgf& f, const QEgf& g) {
  const int n = std::min(f.order(), g.order());
  const auto gauss = gauss_table(n);
  QEgf r(n);
  for (int m = 0; m <= n; ++m) {
    Poly2 acc;
    for (int i = 0; i <= m; ++i) {
      if (f[i].is_zero()) continue;
      acc += lift2(gauss[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)]) * f[i] * g[m - i];
    }
    r.coeff(m) = std::move(acc);
  }
  return r;
}

QEgf q_inverse(const QEgf& f) {
  if (!RingTraits<Poly2>::is_unit(f[0]) || f[0].coeff(0).degree() != 0) {
    throw Error("q-series inverse: constant term is not a nonzero rational");
  }
  const Poly2 inv0 = Poly2(Poly1(RingTraits<Rational>::inverse(f[0].coeff(0).coeff(0))));
  const int n = f.order();
  const auto gauss = gauss_table(n);
  QEgf h(n);
  h.coeff(0) = inv0;
  for (int m = 1; m <= n; ++m) {
    Poly2 acc;
    for (int i = 1; i <= m; ++i) {
      acc -= lift2(gauss[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)]) * f[i] * h[m - i];
    }
    h.coeff(m) = acc * inv0;
  }
  return h;
}

QEgf q_geom_inverse(const QEgf& b) {
  const Poly2 y = Poly2::variable();
  return q_inverse(QEgf::one(b.order()) - y * b);
}

QEgf q_x_times(const QEgf& f) {
  QEgf r(f.order() + 1);
  for (int n = 1; n <= f.order() + 1; ++n) r.coeff(n) = lift2(q_integer(n)) * f[n - 1];
  return r;
}

Poly1 at_q1(const Poly2& p) {
  std::vector<Rational> c;
  for (const auto& inner : p.coeffs()) c.push_back(inner.evaluate(Rational(1)));
  return Poly1(std::move(c));
}

std::vector<Poly1> at_q1(const QEgf& f) {
  std::vector<Poly1> out;
  for (const auto& c : f.coeffs()) out.push_back(at_q1(c));
  return out;
}

Series<Poly1> to_egf_at_q1(const QEgf& f) {
  const auto c = at_q1(f);
  return Series<Poly1>::generate(f.order(), [&c](int n) {
    return c[static_cast<std::size_t>(n)].scaled(Rational(1) / Rational(factorial(n)));
  });
}

}  // namespace poplab
