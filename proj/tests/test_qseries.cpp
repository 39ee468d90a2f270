#include "doctest.h"
#include "poplab/catalog.hpp"
#include "poplab/qseries.hpp"
#include "poplab/qstats.hpp"
#include "poplab/dsl.hpp"

using namespace poplab;

namespace {

Poly1 q() { return Poly1::variable(); }

}  // namespace

TEST_SUITE("qseries") {
  TEST_CASE("q-integers and factorials") {
    CHECK(q_integer(0) == Poly1());
    CHECK(q_integer(3) == Poly1(1) + q() + q() * q());
    CHECK(q_factorial(3) == q_integer(2) * q_integer(3));
    for (int n = 0; n <= 8; ++n) CHECK(q_factorial(n).evaluate(Rational(1)) == Rational(factorial(n)));
  }

  TEST_CASE("Gaussian binomials: symmetry, q = 1, and the product formula") {
    const auto t = gauss_table(9);
    for (int n = 0; n <= 9; ++n) {
      for (int i = 0; i <= n; ++i) {
        const Poly1& g = t[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
        CHECK(g == t[static_cast<std::size_t>(n)][static_cast<std::size_t>(n - i)]);
        CHECK(g.evaluate(Rational(1)) == Rational(binomial(n, i)));
        CHECK(g * q_factorial(i) * q_factorial(n - i) == q_factorial(n));
      }
    }
    CHECK(gauss_binomial(4, 2) == Poly1(std::vector<Rational>{1, 1, 2, 1, 1}));
  }

  TEST_CASE("q-products collapse to exponential products at q = 1") {
    const std::vector<Poly1> a{1, 2, Poly1(1) + q(), 3, q() * q()};
    const std::vector<Poly1> b{1, 0, 1, q(), 5};
    const QEgf fa = QEgf::from_q(a), fb = QEgf::from_q(b);
    const Series<Poly1> lhs = to_egf_at_q1(q_mul(fa, fb));
    const Series<Poly1> rhs = to_egf_at_q1(fa) * to_egf_at_q1(fb);
    CHECK(lhs == rhs);
    CHECK(q_mul(fa, q_inverse(fa)) == QEgf::one(4));
    CHECK(q_mul(fa, fb) == q_mul(fb, fa));
  }

  TEST_CASE("x times f shifts with [n]_q") {
    const QEgf f = QEgf::one(3);
    const QEgf xf = q_x_times(f);
    CHECK(xf.order() == 4);
    CHECK(xf[1] == Poly2(Poly1(1)));
    CHECK(xf == QEgf::x(4));
  }

  TEST_CASE("geometric inverse") {
    const QEgf b = QEgf::x(5);
    const QEgf g = q_geom_inverse(b);
    const Poly2 y = Poly2::variable();
    CHECK(g - y * q_mul(b, g) == QEgf::one(5));
  }

  TEST_CASE("inversion-graded avoiders") {
    const auto all = q_avoiders(std::vector<PopPattern>{}, 6);
    for (int n = 0; n <= 6; ++n) CHECK(all[static_cast<std::size_t>(n)] == q_factorial(n));
    const auto inc = q_avoiders(parse_pattern("21"), 5);
    for (int n = 0; n <= 5; ++n) CHECK(inc[static_cast<std::size_t>(n)] == Poly1(1));
    const auto dec = q_avoiders(parse_pattern("12"), 5);
    CHECK(dec[4] == Poly1::monomial(Rational(1), 6));
  }

  TEST_CASE("identity reports serialise") {
    const IdentityReport r = verify_lemma_B(parse_pattern("12"), 5);
    CHECK(r.passed);
    const auto j = r.to_json();
    CHECK(j["status"] == "pass");
    CHECK(j["n_range"][0] == 1);
    CHECK(j["n_range"][1] == 5);
    CHECK(j["first_failure"].is_null());
  }
}
