#include <random>

#include "doctest.h"
#include "poplab/catalog.hpp"
#include "poplab/error.hpp"
#include "poplab/series.hpp"

using namespace poplab;
using SR = Series<Rational>;
using SY = Series<Poly1>;

namespace {

std::vector<Integer> to_ints(const std::vector<long long>& v) {
  std::vector<Integer> out;
  for (long long x : v) out.emplace_back(std::to_string(x));
  return out;
}

SR random_series(std::mt19937& rng, int order) {
  return SR::generate(order, [&](int) -> Rational {
    Rational r(static_cast<int>(rng() % 11) - 5, static_cast<int>(rng() % 4) + 1);
    r.canonicalize();
    return r;
  });
}

SR univariate(const SY& f) {
  return map_coeffs<Rational>(f, [](const Poly1& p) { return p.coeff(0); });
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(1);
    for (int t = 0; t < 20; ++t) {
      const SR a = random_series(rng, 10), b = random_series(rng, 10), c = random_series(rng, 10);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == SR(10));
      SR u = b;
      u.coeff(0) = Rational(3);
      CHECK(divide(a * u, u) == a);
      CHECK(inverse(u) * u == SR::one(10));
    }
  }

  TEST_CASE("calculus") {
    const SR e = exp_series(1, 12);
    CHECK(derivative(e) == e.truncated(11));
    CHECK(integral(derivative(e)) + SR::one(12) == e);
    const SR s = sin_series(12), c = cos_series(12);
    CHECK(s * s + c * c == SR::one(12));
    CHECK(exp(SR::monomial(1, 12)) == e);
    CHECK(compose(e, SR::monomial(1, 12).scaled(2)) == exp_series(2, 12));
    CHECK(power(e, 3) == exp_series(3, 12));
    std::mt19937 rng(3);
    SR f = random_series(rng, 12);
    f.coeff(0) = 1;
    CHECK(sqrt(f) * sqrt(f) == f);
    CHECK_THROWS_AS(divide(e, SR::monomial(1, 12)), Error);
    CHECK_THROWS_AS(compose(e, e), Error);
  }

  TEST_CASE("quadratic ODE: P' = P^2, P(0) = 1 gives 1/(1-x)") {
    QuadraticRhs<Rational> rhs{SR(10), SR(10), SR::one(10)};
    const SR p = ode_solve(rhs, Rational(1), 10);
    for (int n = 0; n <= 10; ++n) CHECK(p[n] == 1);
    CHECK(ode_residual(rhs, p) == SR(9));
  }

  TEST_CASE("fixed point: C = 1 + x C^2 gives Catalan numbers") {
    const auto c = fixpoint_solve<Rational>([](const SR& p) {
      return SR::one(p.order()) + shift_up(p * p, 1).truncated(p.order());
    }, 10);
    CHECK(gf_counts(c) == to_ints({1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796}));
  }

  TEST_CASE("count extraction") {
    CHECK(egf_counts(exp_series(1, 5)) == to_ints({1, 1, 1, 1, 1, 1}));
    CHECK(egf_counts(inverse(SR::one(5) - SR::monomial(1, 5))) == to_ints({1, 1, 2, 6, 24, 120}));
    CHECK_THROWS_AS(gf_counts(SR::monomial(1, 3, Rational(1, 2))), Error);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(0) == 1);
    CHECK(geometric_poly(3, 5) == SR::one(5) + SR::monomial(1, 5) + SR::monomial(2, 5));
  }
}

TEST_SUITE("catalog") {
  TEST_CASE("every form builds with its defaults") {
    for (const auto& id : catalog_ids()) {
      const CatalogEntry e = catalog(id, {}, 8);
      CHECK(e.id == id);
      CHECK(e.series.order() == 8);
    }
    CHECK_THROWS_AS(catalog("C21", {}, 5), Error);
    CHECK_THROWS_AS(catalog("C1", {{"z", 1}}, 5), Error);
    CHECK_THROWS_AS(catalog("C1", {{"k", 0}}, 5), Error);
  }

  TEST_CASE("involutions: a(n) = a(n-1) + (n-1) a(n-2)") {
    const auto c = egf_counts(univariate(catalog("C1", {{"k", 2}}, 12).series));
    for (std::size_t n = 2; n < c.size(); ++n) CHECK(c[n] == c[n - 1] + Integer(static_cast<long>(n - 1)) * c[n - 2]);
  }

  TEST_CASE("Bell numbers from the Bell triangle") {
    std::vector<Integer> bell{1};
    std::vector<Integer> row{1};
    for (int n = 1; n <= 12; ++n) {
      std::vector<Integer> next{row.back()};
      for (const auto& v : row) next.push_back(next.back() + v);
      bell.push_back(row.back());
      row = next;
    }
    CHECK(egf_counts(univariate(catalog("C2", {}, 12).series)) == bell);
  }

  TEST_CASE("Euler zigzag numbers from the Seidel triangle") {
    std::vector<Integer> zig{1};
    std::vector<Integer> row{1};
    for (int n = 1; n <= 12; ++n) {
      std::vector<Integer> next{0};
      for (auto it = row.rbegin(); it != row.rend(); ++it) next.push_back(next.back() + *it);
      zig.push_back(next.back());
      row = next;
    }
    CHECK(egf_counts(univariate(catalog("C16", {}, 12).series)) == zig);
  }

  TEST_CASE("Eulerian numbers by recurrence") {
    const auto rows = bgf_table(catalog("C3", {}, 9).series, true);
    std::vector<std::vector<Integer>> e{{1}};
    for (int n = 1; n <= 9; ++n) {
      std::vector<Integer> r(static_cast<std::size_t>(n), 0);
      for (int k = 0; k < n; ++k) {
        Integer v = 0;
        const auto& prev = e.back();
        if (k < static_cast<int>(prev.size())) v += Integer(k + 1) * prev[static_cast<std::size_t>(k)];
        if (k >= 1 && k - 1 < static_cast<int>(prev.size())) v += Integer(n - k) * prev[static_cast<std::size_t>(k - 1)];
        r[static_cast<std::size_t>(k)] = v;
      }
      e.push_back(r);
    }
    e[0] = {1};
    for (int n = 1; n <= 9; ++n) {
      auto got = rows[static_cast<std::size_t>(n)];
      got.resize(static_cast<std::size_t>(n), 0);
      CHECK(got == e[static_cast<std::size_t>(n)]);
    }
  }

  TEST_CASE("distribution forms sum to n! at y = 1") {
    for (const auto& [id, params] : std::vector<std::pair<std::string, CatalogParams>>{
             {"C3", {}}, {"C5", {{"ode", 1}}}, {"C18", {{"k", 2}}}, {"C18", {{"k", 3}}}, {"C15", {}}, {"C10", {{"b", 1}}}}) {
      const auto rows = bgf_table(catalog(id, params, 9).series, true);
      for (int n = id == "C15" ? 1 : 0; n <= 9; ++n) {
        Integer s = 0;
        for (const auto& v : rows[static_cast<std::size_t>(n)]) s += v;
        CHECK(s == factorial(n));
      }
    }
  }

  TEST_CASE("restricted forms are ordinary and sum to Catalan") {
    for (auto [k, l] : {std::pair{1, 0}, std::pair{2, 0}, std::pair{1, 1}, std::pair{2, 1}}) {
      const auto rows = bgf_table(catalog("C8", {{"k", k}, {"l", l}}, 10).series, false);
      for (int n = 0; n <= 10; ++n) {
        Integer s = 0;
        for (const auto& v : rows[static_cast<std::size_t>(n)]) s += v;
        CHECK(s == binomial(2 * n, n) / (n + 1));
      }
      CHECK(catalog("C19", {{"k", k}, {"l", l}}, 10).series == catalog("C8", {{"k", k}, {"l", l}}, 10).series);
    }
  }

  TEST_CASE("Eulerian identity for small n at high order") {
    const auto c = univariate(catalog("C17", {{"n", 3}}, 10).series);
    CHECK(c[1] == 1);
    CHECK(c[2] == 4);
    CHECK(c[3] == 1);
    for (int j = 4; j <= 10; ++j) CHECK(c[j] == 0);
  }

  TEST_CASE("series printing") {
    CHECK(series_lines(geometric_poly(2, 3)) == "0: 1\n1: 1\n2: 0\n3: 0\n");
  }
}
