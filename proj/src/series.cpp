#include "poplab/series.hpp"

#include <sstream>

namespace poplab {

Integer factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Series<Rational> exp_series(const Rational& a, int order) {
  Series<Rational> s(order);
  Rational term = 1;
  for (int n = 0; n <= order; ++n) {
    s.coeff(n) = term;
    term = term * a / (n + 1);
  }
  return s;
}

Series<Rational> sin_series(int order) {
  return Series<Rational>::generate(order, [](int n) {
    if (n % 2 == 0) return Rational(0);
    Rational r(1);
    r /= Rational(factorial(n));
    return (n / 2) % 2 == 0 ? r : Rational(-r);
  });
}

Series<Rational> cos_series(int order) {
  return Series<Rational>::generate(order, [](int n) {
    if (n % 2 == 1) return Rational(0);
    Rational r(1);
    r /= Rational(factorial(n));
    return (n / 2) % 2 == 0 ? r : Rational(-r);
  });
}

Series<Rational> tan_series(int order) { return divide(sin_series(order), cos_series(order)); }

Series<Rational> sec_series(int order) { return inverse(cos_series(order)); }

Series<Rational> geometric_poly(int k, int order) {
  return Series<Rational>::generate(order, [k](int n) { return Rational(n < k ? 1 : 0); });
}

std::vector<Integer> egf_counts(const Series<Rational>& f) {
  std::vector<Integer> out;
  for (int n = 0; n <= f.order(); ++n) {
    Rational v = f[n] * Rational(factorial(n));
    v.canonicalize();
    if (!is_integral(v)) {
      throw Error("egf_counts: coefficient " + std::to_string(n) + " scales to non-integer " + v.get_str());
    }
    out.push_back(v.get_num());
  }
  return out;
}

std::vector<Integer> gf_counts(const Series<Rational>& f) {
  std::vector<Integer> out;
  for (int n = 0; n <= f.order(); ++n) {
    if (!is_integral(f[n])) {
      throw Error("gf_counts: coefficient " + std::to_string(n) + " is not an integer: " + f[n].get_str());
    }
    out.push_back(f[n].get_num());
  }
  return out;
}

std::vector<std::vector<Integer>> bgf_table(const Series<Poly1>& f, bool exponential) {
  std::vector<std::vector<Integer>> rows;
  for (int n = 0; n <= f.order(); ++n) {
    const Rational scale = exponential ? Rational(factorial(n)) : Rational(1);
    std::vector<Integer> row;
    for (const auto& c : f[n].coeffs()) {
      Rational v = c * scale;
      if (!is_integral(v)) {
        throw Error("bgf_table: row " + std::to_string(n) + " has non-integer entry " + v.get_str());
      }
      row.push_back(v.get_num());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string series_lines(const Series<Rational>& f) {
  std::ostringstream out;
  for (int n = 0; n <= f.order(); ++n) out << n << ": " << f[n].get_str() << '\n';
  return out.str();
}

std::string series_lines(const Series<Poly1>& f) {
  std::ostringstream out;
  for (int n = 0; n <= f.order(); ++n) out << n << ": " << f[n].to_string("y") << '\n';
  return out.str();
}

}  // namespace poplab
