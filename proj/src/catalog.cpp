#include "poplab/catalog.hpp"

#include <functional>

#include "poplab/error.hpp"

namespace poplab {

namespace {

using SR = Series<Rational>;
using SY = Series<Poly1>;

const Poly1 kY = Poly1::variable();

SR x_series(int order) { return SR::monomial(1, order); }

SY lifted(const SR& f) { return lift<Poly1>(f); }

SY exact_div_y(const SY& f) {
  return map_coeffs<Poly1>(f, [](const Poly1& c) { return c.exact_div(kY); });
}

// (x - 1) f, same order as f.
SR x_minus_one_times(const SR& f) { return shift_up(f, 1).truncated(f.order()) - f; }

SR tan_plus_sec(int order) { return tan_series(order) + sec_series(order); }

// Coefficient of u^{2j+1} in tan u.
Rational tan_odd(const SR& tan, int j) { return tan[2 * j + 1]; }

SR bell(int order) {
  const SR inner = exp_series(1, order) - SR::one(order);
  return exp(inner);
}

SR flat_cycles(int k, int order) {
  SR s(order);
  for (int i = 1; i <= std::min(k, order); ++i) s.coeff(i) = Rational(1, i);
  return exp(s);
}

// C3: (1-y)/(e^{(y-1)x} - y) = 1/(1 - sum_{n>=1} (y-1)^{n-1} x^n/n!).
SY descents(int order) {
  SY s(order);
  const Poly1 w = kY - Poly1(1);
  Poly1 wpow(1);
  for (int n = 1; n <= order; ++n) {
    s.coeff(n) = wpow.scaled(Rational(1) / Rational(factorial(n)));
    wpow = wpow * w;
  }
  return inverse(SY::one(order) - s);
}

// C5 closed form. With s = sqrt(y-1), tan addition gives
// s tan(xs + arctan(1/s)) = (1 + w U)/(1 - U), w = y-1, U = tan(xs)/s,
// and U = sum_j t_{2j+1} w^j x^{2j+1} is a series in w only.
// Then y F = y - 1 + (1 + wU)/(1 - U), divided by y exactly.
SY valleys_closed(int order) {
  const SR tan = tan_series(order);
  const Poly1 w = kY - Poly1(1);
  SY u(order);
  Poly1 wpow(1);
  for (int j = 0; 2 * j + 1 <= order; ++j) {
    u.coeff(2 * j + 1) = wpow.scaled(tan_odd(tan, j));
    wpow = wpow * w;
  }
  const SY one = SY::one(order);
  const SY ratio = divide(one + w * u, one - u);
  return exact_div_y(SY::constant(w, order) + ratio);
}

// C6: numerator 1 - x - sqrt(1-2x-3x^2-4x^3) is divisible by x^2; shift down,
// halve, then divide by the unit 1 + x.
SR horse(int order) {
  const int o = order + 2;
  SR disc(o);
  disc.coeff(0) = 1;
  if (o >= 1) disc.coeff(1) = -2;
  if (o >= 2) disc.coeff(2) = -3;
  if (o >= 3) disc.coeff(3) = -4;
  SR num = SR::one(o) - x_series(o) - sqrt(disc);
  SR reduced = shift_down(num, 2).scaled(Rational(1, 2));
  SR one_plus_x = SR::one(order) + x_series(order);
  return divide(reduced, one_plus_x);
}

// C11: 1/2 + 1/4 tan x (1 + e^{2x} + 2 e^x sin x) + 1/2 e^x cos x.
SR pattern_122p1p(int order) {
  const SR ex = exp_series(1, order);
  const SR bracket = SR::one(order) + exp_series(2, order) + (ex * sin_series(order)).scaled(2);
  return SR::constant(Rational(1, 2), order) + (tan_series(order) * bracket).scaled(Rational(1, 4)) +
         (ex * cos_series(order)).scaled(Rational(1, 2));
}

// C12: x e^{x/2} (cos(rx) - (1/sqrt 3) sin(rx))^{-1} + 1 with r = sqrt(3)/2.
// cos(rx) = sum (-1)^j (3/4)^j x^{2j}/(2j)!, and
// (1/sqrt 3) sin(rx) = sum (-1)^j 3^j / 2^{2j+1} x^{2j+1}/(2j+1)!.
SR pattern_1231p(int order) {
  SR d(order);
  for (int n = 0; n <= order; ++n) {
    const int j = n / 2;
    const Rational sign = j % 2 == 0 ? Rational(1) : Rational(-1);
    Rational three_j = 1;
    for (int i = 0; i < j; ++i) three_j *= 3;
    Rational v;
    if (n % 2 == 0) {
      Rational four_j = 1;
      for (int i = 0; i < j; ++i) four_j *= 4;
      v = sign * three_j / four_j;
    } else {
      Rational two = 1;
      for (int i = 0; i < 2 * j + 1; ++i) two *= 2;
      v = -sign * three_j / two;
    }
    d.coeff(n) = v / Rational(factorial(n));
  }
  SR body = exp_series(Rational(1, 2), order) * inverse(d);
  return shift_up(body, 1).truncated(order) + SR::one(order);
}

// C13: x (1 - int_0^x e^{-t^2/2} dt)^{-1} + 1.
SR pattern_1321p(int order) {
  SR gauss(order);
  for (int j = 0; 2 * j <= order; ++j) {
    Rational c = Rational(1) / Rational(factorial(j));
    for (int i = 0; i < j; ++i) c *= Rational(-1, 2);
    gauss.coeff(2 * j) = c;
  }
  const SR integral_part = integral(gauss).truncated(order);
  const SR body = inverse(SR::one(order) - integral_part);
  return shift_up(body, 1).truncated(order) + SR::one(order);
}

// C15: with z^2 = 1 - y and W = tanh(xz)/z = sum_j (-1)^j t_{2j+1} (1-y)^j x^{2j+1},
// z x (1 - z tanh xz)/(z - tanh xz) = x (1 - (1-y) W)/(1 - W).
SY circular_maxima_gf(int order) {
  const SR tan = tan_series(order);
  const Poly1 zz = Poly1(1) - kY;
  SY w(order);
  Poly1 zpow(1);
  for (int j = 0; 2 * j + 1 <= order; ++j) {
    const Rational h = j % 2 == 0 ? tan_odd(tan, j) : Rational(-tan_odd(tan, j));
    w.coeff(2 * j + 1) = zpow.scaled(h);
    zpow = zpow * zz;
  }
  const SY one = SY::one(order);
  const SY body = divide(one - zz * w, one - w);
  return shift_up(body, 1).truncated(order);
}

// C17: (1-t)^{n+1} sum_k k^n t^k, which should be the Eulerian polynomial.
SR eulerian_check(int n, int order) {
  SR s(order);
  for (int k = 0; k <= order; ++k) {
    Integer p = 1;
    for (int i = 0; i < n; ++i) p *= k;
    if (n == 0) p = 1;
    s.coeff(k) = Rational(p);
  }
  SR one_minus_t = SR::one(order) - x_series(order);
  return power(one_minus_t, n + 1) * s;
}

int param(const CatalogParams& given, const CatalogParams& defaults, const std::string& name) {
  auto it = given.find(name);
  return it != given.end() ? it->second : defaults.at(name);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("catalog: " + what);
}

const std::map<std::string, CatalogParams>& defaults_table() {
  static const std::map<std::string, CatalogParams> table = {
      {"C1", {{"k", 2}}},
      {"C2", {}},
      {"C3", {}},
      {"C4", {}},
      {"C5", {{"ode", 0}}},
      {"C6", {}},
      {"C7", {{"k", 3}}},
      {"C8", {{"k", 1}, {"l", 1}}},
      {"C9", {{"k", 2}}},
      {"C10", {{"b", 0}, {"words", 0}}},
      {"C11", {}},
      {"C12", {}},
      {"C13", {}},
      {"C14", {{"tau", 1}}},
      {"C15", {}},
      {"C16", {}},
      {"C17", {{"n", 4}}},
      {"C18", {{"k", 1}}},
      {"C19", {{"k", 1}, {"l", 1}}},
      {"C20", {{"k", 1}, {"l", 1}}},
  };
  return table;
}

}  // namespace

Series<Poly1> y_series(int order) { return SY::constant(kY, order); }

Series<Rational> catalan_partial(int k, int order) {
  SR s(order);
  for (int n = 0; n < k && n <= order; ++n) {
    Rational c(binomial(2 * n, n));
    s.coeff(n) = c / Rational(n + 1);
  }
  return s;
}

Series<Poly1> flat_distribution_ode(int k, int l, int order) {
  if (k < 0 || l < 0) throw Error("flat_distribution_ode: negative block length");
  const SY gk = lifted(geometric_poly(k, order));
  const SY gl = lifted(geometric_poly(l, order));
  const Poly1 y = kY;
  QuadraticRhs<Poly1> rhs;
  rhs.c2 = SY::constant(y, order);
  rhs.c1 = (Poly1(1) - y) * (gk + gl);
  rhs.c0 = (y - Poly1(1)) * (gk * gl);
  return ode_solve(rhs, Poly1(1), order);
}

Series<Rational> flat_avoidance_ode(int k, int l, int order) {
  if (k < 0 || l < 0) throw Error("flat_avoidance_ode: negative block length");
  const SR gk = geometric_poly(k, order);
  const SR gl = geometric_poly(l, order);
  QuadraticRhs<Rational> rhs;
  rhs.c2 = SR(order);
  rhs.c1 = gk + gl;
  rhs.c0 = -(gk * gl);
  return ode_solve(rhs, Rational(1), order);
}

Series<Poly1> restricted_flat_fixpoint(int k, int l, int order) {
  const SY pk = lifted(catalan_partial(k, order));
  const SY pl = lifted(catalan_partial(l, order));
  const SY y = y_series(order);
  std::function<SY(const SY&)> phi = [&](const SY& p) {
    const SY inner = y * (p - pk) * (p - pl) + pk * p + p * pl - pk * pl;
    return SY::one(order) + shift_up(inner, 1).truncated(order);
  };
  return fixpoint_solve(phi, order);
}

Series<Poly1> restricted_flat_closed(int k, int l, int order) {
  const int o = order + 1;
  const SY pk = lifted(catalan_partial(k, o));
  const SY pl = lifted(catalan_partial(l, o));
  const SY one = SY::one(o);
  const SY x = SY::monomial(1, o);
  const Poly1 y = kY;
  const SY s = (Poly1(1) - y) * (x * (pk + pl));
  const SY disc = (s - one) * (s - one) - (y.scaled(4)) * (x * ((y - Poly1(1)) * (x * pk * pl) + one));
  const SY num = one - s - sqrt(disc);
  return exact_div_y(shift_down(num, 1)).scaled(Rational(1, 2));
}

Series<Rational> shuffle_ode(const Series<Rational>& a, const Series<Rational>& b, int order) {
  QuadraticRhs<Rational> rhs;
  rhs.c2 = SR(order);
  rhs.c1 = (a + b).truncated(order);
  rhs.c0 = -(a * b).truncated(order);
  return ode_solve(rhs, Rational(1), order);
}

Series<Rational> multi_pattern_egf(const std::vector<Series<Rational>>& blocks) {
  if (blocks.empty()) throw Error("multi_pattern_egf: no blocks");
  int order = blocks.front().order();
  for (const auto& b : blocks) order = std::min(order, b.order());
  SR sum(order);
  SR prod = SR::one(order);
  for (const auto& b : blocks) {
    const SR a = b.truncated(order);
    sum += a * prod;
    prod = prod * (x_minus_one_times(a) + SR::one(order));
  }
  return sum;
}

Series<Poly1> nonoverlap_bgf(const Series<Rational>& b) {
  const int order = b.order();
  const SR quasi = x_minus_one_times(b) + SR::one(order);
  return divide(lifted(b), SY::one(order) - kY * lifted(quasi));
}

Series<Poly1> nonoverlap_word_bgf(const Series<Rational>& b, int k) {
  const int order = b.order();
  const SR quasi = shift_up(b, 1).truncated(order).scaled(k) - b + SR::one(order);
  return divide(lifted(b), SY::one(order) - kY * lifted(quasi));
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (int i = 1; i <= 20; ++i) ids.push_back("C" + std::to_string(i));
  return ids;
}

CatalogParams catalog_defaults(const std::string& id) {
  auto it = defaults_table().find(id);
  if (it == defaults_table().end()) throw Error("catalog: unknown form '" + id + "'");
  return it->second;
}

CatalogEntry catalog(const std::string& id, const CatalogParams& params, int order) {
  const CatalogParams defaults = catalog_defaults(id);
  require(order >= 0, "negative order");
  for (const auto& [name, value] : params) {
    (void)value;
    require(defaults.count(name) > 0, "form " + id + " has no parameter '" + name + "'");
  }
  auto get = [&](const std::string& name) { return param(params, defaults, name); };

  CatalogEntry e;
  e.id = id;
  if (id == "C1") {
    const int k = get("k");
    require(k >= 1, "C1 needs k >= 1");
    e.description = "exp(sum_{i<=k} x^i/i): avoiders of a-a1..ak";
    e.series = lifted(flat_cycles(k, order));
  } else if (id == "C2") {
    e.description = "exp(e^x - 1): Bell numbers";
    e.series = lifted(bell(order));
  } else if (id == "C3") {
    e.description = "descent distribution (1-y)/(e^{(y-1)x} - y)";
    e.bivariate = true;
    e.series = descents(order);
  } else if (id == "C4") {
    e.description = "(e^{2x} + 1)/2: avoiders of a1aa2";
    e.series = lifted((exp_series(2, order) + SR::one(order)).scaled(Rational(1, 2)));
  } else if (id == "C5") {
    const int ode = get("ode");
    require(ode == 0 || ode == 1, "C5 parameter ode is 0 or 1");
    e.description = ode ? "valley distribution from the k=l=1 differential equation"
                        : "valley distribution from the tangent closed form";
    e.bivariate = true;
    e.series = ode ? flat_distribution_ode(1, 1, order) : valleys_closed(order);
  } else if (id == "C6") {
    e.description = "Horse permutations (1-x-sqrt(1-2x-3x^2-4x^3))/(2x^2(1+x))";
    e.exponential = false;
    e.series = lifted(horse(order));
  } else if (id == "C7") {
    const int k = get("k");
    require(k >= 0, "C7 needs k >= 0");
    e.description = "Catalan partial sum P_k";
    e.exponential = false;
    e.series = lifted(catalan_partial(k, order));
  } else if (id == "C8" || id == "C19") {
    const int k = get("k");
    const int l = get("l");
    require(k >= 0 && l >= 0 && k + l >= 1, id + " needs k, l >= 0 with k + l >= 1");
    e.exponential = false;
    e.bivariate = true;
    if (id == "C8") {
      e.description = "flat pattern on S_n(2-1-3), fixed-point form";
      e.series = restricted_flat_fixpoint(k, l, order);
    } else {
      e.description = "flat pattern on S_n(2-1-3), radical closed form";
      e.series = restricted_flat_closed(k, l, order);
    }
  } else if (id == "C9") {
    const int k = get("k");
    require(k >= 1, "C9 needs k >= 1");
    e.description = "(1 - (1 + (x-1)e^x)^k)/(1 - x): k blocks of length 2";
    SR inner = x_minus_one_times(exp_series(1, order)) + SR::one(order);
    SR num = SR::one(order) - power(inner, k);
    e.series = lifted(divide(num, SR::one(order) - x_series(order)));
  } else if (id == "C10") {
    const int b = get("b");
    const int words = get("words");
    require(b == 0 || b == 1, "C10 parameter b is 0 (11') or 1 (122'1')");
    require(words >= 0, "C10 parameter words is >= 0");
    require(!(words > 0 && b == 1), "C10 word form is defined for b = 0 only");
    e.bivariate = true;
    if (words > 0) {
      e.description = "non-overlap distribution of 11' on words, B = 1 + kx";
      e.exponential = false;
      SR bw = SR::one(order);
      if (order >= 1) bw.coeff(1) = words;
      e.series = nonoverlap_word_bgf(bw, words);
    } else {
      e.description = b == 0 ? "non-overlap distribution of 11', B = 1 + x"
                             : "non-overlap distribution of 122'1', B = C11";
      const SR base = b == 0 ? SR::one(order) + x_series(order) : pattern_122p1p(order);
      e.series = nonoverlap_bgf(base);
    }
  } else if (id == "C11") {
    e.description = "avoiders of 122'1'";
    e.series = lifted(pattern_122p1p(order));
  } else if (id == "C12") {
    e.description = "avoiders of 1231'";
    e.series = lifted(pattern_1231p(order));
  } else if (id == "C13") {
    e.description = "avoiders of 1321' and 2131'";
    e.series = lifted(pattern_1321p(order));
  } else if (id == "C14") {
    const int tau = get("tau");
    require(tau == 0 || tau == 1, "C14 parameter tau is 0 (empty) or 1 (21)");
    e.description = tau ? "shuffle pattern 12-m-21" : "shuffle pattern 12-m";
    const SR a = exp_series(1, order);
    const SR b = tau ? exp_series(1, order) : SR(order);
    e.series = lifted(shuffle_ode(a, b, order));
  } else if (id == "C15") {
    e.description = "circular maxima zx(1 - z tanh xz)/(z - tanh xz), z^2 = 1-y";
    e.bivariate = true;
    e.series = circular_maxima_gf(order);
  } else if (id == "C16") {
    e.description = "tan x + sec x: alternating permutations";
    e.series = lifted(tan_plus_sec(order));
  } else if (id == "C17") {
    const int n = get("n");
    require(n >= 0, "C17 needs n >= 0");
    e.description = "(1-t)^{n+1} sum_k k^n t^k in t";
    e.exponential = false;
    e.series = lifted(eulerian_check(n, order));
  } else if (id == "C18") {
    const int k = get("k");
    require(k >= 1, "C18 needs k >= 1");
    e.description = "distribution of aa1..ak from its differential equation";
    e.bivariate = true;
    e.series = flat_distribution_ode(k, 0, order);
  } else if (id == "C20") {
    const int k = get("k");
    const int l = get("l");
    require(k >= 0 && l >= 0, "C20 needs k, l >= 0");
    e.description = "avoiders of a1..ak a ak+1..ak+l from its differential equation";
    e.series = lifted(flat_avoidance_ode(k, l, order));
  }
  return e;
}

}  // namespace poplab
