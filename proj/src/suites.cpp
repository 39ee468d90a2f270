#include "poplab/suites.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "poplab/bijections.hpp"
#include "poplab/catalog.hpp"
#include "poplab/data.hpp"
#include "poplab/dsl.hpp"
#include "poplab/enumerate.hpp"
#include "poplab/error.hpp"
#include "poplab/flat.hpp"
#include "poplab/qstats.hpp"
#include "poplab/stats.hpp"

namespace poplab {

namespace {

using Ints = std::vector<Integer>;
using Rows = std::vector<Ints>;
using SR = Series<Rational>;
using SY = Series<Poly1>;

std::string text(const Ints& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i].get_str();
  return out.str();
}

std::string text(const Rows& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? " | " : "") << text(rows[i]);
  return out.str();
}

std::string text(const DistributionTable& t) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, count] : t.cells()) {
    out << (first ? "" : " ") << '(';
    for (std::size_t i = 0; i < key.size(); ++i) out << (i ? "," : "") << key[i];
    out << "):" << count.get_str();
    first = false;
  }
  return out.str();
}

std::string text(const SY& f) {
  std::ostringstream out;
  for (int n = 0; n <= f.order(); ++n) out << (n ? "; " : "") << f[n].to_string("y");
  return out.str();
}

struct Outcome {
  bool passed = false;
  std::string expected;
  std::string computed;
};

template <class T>
Outcome same(const T& expected, const T& computed) {
  return {expected == computed, text(expected), text(computed)};
}

Ints ints(const std::vector<long long>& v) {
  Ints out;
  for (long long x : v) out.emplace_back(std::to_string(x));
  return out;
}

Ints slice(const Ints& v, int from, int to) {
  return Ints(v.begin() + from, v.begin() + to + 1);
}

Integer pow2(int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= 2;
  return r;
}

Integer central(int n) { return binomial(n, n / 2); }

class Suite {
 public:
  Suite(const std::string& name, const SuiteOptions& opts) : opts_(opts) {
    report_.suite = name;
    sweep_.jobs = opts.jobs;
  }

  void check(int criterion, const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    c.criterion = criterion;
    c.name = name;
    try {
      Outcome o = body();
      c.passed = o.passed;
      c.expected = std::move(o.expected);
      c.computed = std::move(o.computed);
    } catch (const std::exception& e) {
      c.passed = false;
      c.computed = std::string("error: ") + e.what();
    }
    c.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.millis += c.millis;
    report_.checks.push_back(std::move(c));
  }

  void note(std::string s) { report_.notes.push_back(std::move(s)); }

  const SweepOptions& sweep() const { return sweep_; }
  const SuiteOptions& options() const { return opts_; }
  SuiteReport take() { return std::move(report_); }

  // |S_n(patterns)| for n = from..to.
  Ints counts(const std::vector<PopPattern>& patterns, int from, int to) const {
    return slice(avoider_sequence(patterns, to, sweep_), from, to);
  }

  Rows distribution_rows(const PopPattern& p, int n_max, const std::vector<PopPattern>& restriction = {}) const {
    Rows rows;
    for (int n = 0; n <= n_max; ++n) rows.push_back(distribution(p, n, restriction, sweep_).row());
    return rows;
  }

 private:
  SuiteOptions opts_;
  SweepOptions sweep_;
  SuiteReport report_;
};

PopPattern pat(const std::string& notation, const std::string& poset) {
  return parse_pattern(notation, bundled_poset(poset));
}

PopPattern classical(const std::string& notation) { return parse_pattern(notation); }

Rows bgf_rows(const SY& f, bool exponential, int from, int to) {
  auto t = bgf_table(f.truncated(to), exponential);
  return Rows(t.begin() + from, t.end());
}

Ints egf_slice(const SR& f, int from, int to) { return slice(egf_counts(f.truncated(to)), from, to); }

SR egf_of(const Ints& counts) {
  return SR::generate(static_cast<int>(counts.size()) - 1, [&](int n) -> Rational {
    return Rational(counts[static_cast<std::size_t>(n)]) / Rational(factorial(n));
  });
}

SR rational_part(const SY& f) {
  return map_coeffs<Rational>(f, [](const Poly1& p) {
    if (p.degree() > 0) throw Error("series depends on y");
    return p.coeff(0);
  });
}

Ints column(const Rows& rows, std::size_t j) {
  Ints out;
  for (const auto& r : rows) out.push_back(j < r.size() ? r[j] : Integer(0));
  return out;
}

Ints row_sums(const Rows& rows) {
  Ints out;
  for (const auto& r : rows) {
    Integer s = 0;
    for (const auto& v : r) s += v;
    out.push_back(s);
  }
  return out;
}

// --- table1 ------------------------------------------------------------------

void table1(Suite& s) {
  const CsvTable t = golden("table1");
  const auto cp = t.column("pattern");
  const auto cs = t.column("poset");
  const auto cf = t.column("first_n");
  const auto cv = t.column("values");
  for (const auto& row : t.rows) {
    s.check(1, "avoiders of " + row[cp], [&] {
      const Ints expected = ints(parse_integers(row[cv]));
      const int first = std::stoi(row[cf]);
      const int last = first + static_cast<int>(expected.size()) - 1;
      return same(expected, s.counts({pat(row[cp], row[cs])}, first, last));
    });
  }
}

// --- flatposet -----------------------------------------------------------------

void flatposet(Suite& s) {
  for (int k : {2, 3}) {
    const std::string ks = std::to_string(k);
    s.check(3, "S_n(a-a1..a" + ks + ") equals S_n(aa1..a" + ks + ") as sets, n<=9", [&] {
      const PopPattern dashed = flat_dashed_pattern(k);
      const PopPattern seg = flat_segmented_pattern(k);
      Ints sizes_d, sizes_s;
      bool equal = true;
      for (int n = 0; n <= 9; ++n) {
        const auto a = avoider_set({dashed}, n, s.sweep());
        const auto b = avoider_set({seg}, n, s.sweep());
        sizes_d.emplace_back(static_cast<long>(a.size()));
        sizes_s.emplace_back(static_cast<long>(b.size()));
        equal = equal && a == b;
      }
      return Outcome{equal, text(sizes_d), text(sizes_s)};
    });
    s.check(3, "|S_n(a-a1..a" + ks + ")| from exp(sum x^i/i), n<=9", [&] {
      return same(egf_slice(rational_part(catalog("C1", {{"k", k}}, 9).series), 0, 9),
                  s.counts({flat_dashed_pattern(k)}, 0, 9));
    });
    s.check(3, "permutations with cycles of length <=" + ks + " from exp(sum x^i/i), n<=9", [&] {
      Ints computed;
      for (int n = 0; n <= 9; ++n) {
        long c = 0;
        PermutationStream ps(n);
        while (ps.next()) {
          bool ok = true;
          for (const auto& cyc : cycles(Permutation(std::vector<int>(ps.current().begin(), ps.current().end()))))
            ok = ok && static_cast<int>(cyc.size()) <= k;
          c += ok;
        }
        computed.emplace_back(c);
      }
      return same(egf_slice(rational_part(catalog("C1", {{"k", k}}, 9).series), 0, 9), computed);
    });
  }

  for (int k : {1, 2, 3}) {
    s.check(4, "single-block equation vs occurrences of aa1..a" + std::to_string(k) + ", n<=8", [&] {
      return same(bgf_rows(catalog("C18", {{"k", k}}, 8).series, true, 0, 8),
                  s.distribution_rows(flat_segmented_pattern(k), 8));
    });
  }
  s.check(4, "single-block equation at k=1 equals the descent closed form, order 10", [&] {
    const SY a = catalog("C18", {{"k", 1}}, 10).series;
    const SY b = catalog("C3", {}, 10).series;
    return Outcome{a == b, text(b), text(a)};
  });
  s.check(4, "descent closed form vs Eulerian distribution, n<=8", [&] {
    Rows rows;
    for (int n = 0; n <= 8; ++n) rows.push_back(stat_distribution("des", named_statistic("des"), n, {}, s.sweep()).row());
    return same(bgf_rows(catalog("C3", {}, 8).series, true, 0, 8), rows);
  });

  s.check(5, "two-block equation (1,1) vs valley distribution, n<=8", [&] {
    return same(bgf_rows(catalog("C5", {{"ode", 1}}, 8).series, true, 0, 8),
                s.distribution_rows(flat_split_pattern(1, 1), 8));
  });
  s.check(5, "two-block equation (1,1) vs peak distribution of 1'21'', n<=8", [&] {
    return same(bgf_rows(catalog("C5", {{"ode", 1}}, 8).series, true, 0, 8),
                s.distribution_rows(pat("1'21''", "peaks"), 8));
  });
  s.check(5, "valleyless permutations number 2^(n-1), n=1..8", [&] {
    Ints expected;
    for (int n = 1; n <= 8; ++n) expected.push_back(pow2(n - 1));
    const Ints ode = slice(column(bgf_rows(catalog("C5", {{"ode", 1}}, 8).series, true, 0, 8), 0), 1, 8);
    const Ints brute = s.counts({flat_split_pattern(1, 1)}, 1, 8);
    return Outcome{expected == ode && expected == brute, text(expected), text(ode) + " / " + text(brute)};
  });
  s.check(5, "y times tangent closed form equals y times equation solution, order 10", [&] {
    const SY y = y_series(10);
    const SY closed = y * catalog("C5", {{"ode", 0}}, 10).series;
    const SY ode = y * catalog("C5", {{"ode", 1}}, 10).series;
    return Outcome{closed == ode, text(ode), text(closed)};
  });

  s.check(6, "equation (1,2) at y=0 vs avoiders of a1aa2a3, n<=9", [&] {
    return same(egf_slice(rational_part(catalog("C20", {{"k", 1}, {"l", 2}}, 9).series), 0, 9),
                s.counts({flat_split_pattern(1, 2)}, 0, 9));
  });
}

// --- restricted ------------------------------------------------------------------

void restricted(Suite& s) {
  const std::vector<PopPattern> r213{classical("2-1-3")};

  s.check(7, "fixed point (1,0) at y=1 gives Catalan numbers, n<=10", [&] {
    Ints expected;
    for (int n = 0; n <= 10; ++n) expected.push_back(binomial(2 * n, n) / (n + 1));
    return same(expected, row_sums(bgf_rows(catalog("C8", {{"k", 1}, {"l", 0}}, 10).series, false, 0, 10)));
  });
  s.check(7, "|S_n(2-1-3)| is Catalan, n<=9", [&] {
    Ints expected;
    for (int n = 0; n <= 9; ++n) expected.push_back(binomial(2 * n, n) / (n + 1));
    return same(expected, s.counts(r213, 0, 9));
  });
  for (auto [k, l] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{1, 2}}) {
    const std::string kl = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
    s.check(7, "radical closed form equals fixed point " + kl + ", order 10", [&, k = k, l = l] {
      const SY a = catalog("C19", {{"k", k}, {"l", l}}, 10).series;
      const SY b = catalog("C8", {{"k", k}, {"l", l}}, 10).series;
      return Outcome{a == b, text(b), text(a)};
    });
  }
  s.check(7, "fixed point (1,0) vs descents on S_n(2-1-3), n<=9", [&] {
    return same(bgf_rows(catalog("C8", {{"k", 1}, {"l", 0}}, 9).series, false, 0, 9),
                s.distribution_rows(flat_split_pattern(1, 0), 9, r213));
  });
  s.check(7, "fixed point (1,0) rows are Narayana numbers, n=1..10", [&] {
    Rows expected;
    for (int n = 1; n <= 10; ++n) {
      Ints row;
      for (int j = 0; j < n; ++j) row.push_back(binomial(n, j) * binomial(n, j + 1) / n);
      expected.push_back(row);
    }
    return same(expected, bgf_rows(catalog("C8", {{"k", 1}, {"l", 0}}, 10).series, false, 1, 10));
  });
  s.check(7, "fixed point (1,1) vs 312 occurrences on S_n(2-1-3), n<=9", [&] {
    const Rows series = bgf_rows(catalog("C8", {{"k", 1}, {"l", 1}}, 9).series, false, 0, 9);
    const Rows flat = s.distribution_rows(flat_split_pattern(1, 1), 9, r213);
    const Rows p312 = s.distribution_rows(classical("312"), 9, r213);
    return Outcome{series == flat && series == p312, text(series), text(flat) + " / " + text(p312)};
  });
  s.check(7, "one occurrence of 312 on S_n(2-1-3): (n-1)(n-2)2^(n-4), n<=10", [&] {
    Ints expected;
    for (int n = 0; n <= 10; ++n) expected.push_back(n < 3 ? Integer(0) : Integer((n - 1) * (n - 2)) * pow2(n) / 16);
    return same(expected, column(bgf_rows(catalog("C8", {{"k", 1}, {"l", 1}}, 10).series, false, 0, 10), 1));
  });
  s.check(7, "S_n(2-1-3, 312) numbers 2^(n-1), n=1..10", [&] {
    Ints expected;
    for (int n = 1; n <= 10; ++n) expected.push_back(pow2(n - 1));
    return same(expected, column(bgf_rows(catalog("C8", {{"k", 1}, {"l", 1}}, 10).series, false, 1, 10), 0));
  });
  s.check(7, "fixed point (1,2) at y=0 is Pell and satisfies its recurrence for n=3..10", [&] {
    const Ints c = column(bgf_rows(catalog("C8", {{"k", 1}, {"l", 2}}, 10).series, false, 0, 10), 0);
    Ints pell{Integer(0), Integer(1)};
    for (int n = 2; n <= 10; ++n) pell.push_back(2 * pell[static_cast<std::size_t>(n - 1)] + pell[static_cast<std::size_t>(n - 2)]);
    bool ok = true;
    for (int n = 3; n <= 10; ++n) {
      const auto i = static_cast<std::size_t>(n);
      ok = ok && c[i] == 2 * c[i - 1] + c[i - 2];
    }
    ok = ok && slice(c, 1, 10) == slice(pell, 1, 10);
    return Outcome{ok, text(slice(pell, 1, 10)), text(slice(c, 1, 10))};
  });
  s.check(7, "fixed point (1,2) at y=0 vs |S_n(2-1-3, a1aa2a3)|, n<=9", [&] {
    std::vector<PopPattern> both = r213;
    both.push_back(flat_split_pattern(1, 2));
    return same(column(bgf_rows(catalog("C8", {{"k", 1}, {"l", 2}}, 9).series, false, 0, 9), 0),
                s.counts(both, 0, 9));
  });

  s.check(8, "Horse generating function vs |S_n(1-3-2, 1~23)|, n<=10", [&] {
    return same(gf_counts(rational_part(catalog("C6", {}, 10).series)),
                s.counts({classical("1-3-2"), classical("1~23")}, 0, 10));
  });
}

// --- series-closedforms ------------------------------------------------------------

void closedforms(Suite& s) {
  struct Case {
    std::string notation;
    std::string poset;
  };
  for (const Case& c : {Case{"11'", "fig1"}, Case{"11'2", "fig1"}, Case{"122'1'", "fig10"}}) {
    s.check(9, "non-overlap distribution of " + c.notation + " from its avoiders, n<=8", [&] {
      const PopPattern p = pat(c.notation, c.poset);
      const SR b = egf_of(s.counts({p}, 0, 8));
      Rows brute;
      for (int n = 0; n <= 8; ++n) brute.push_back(nonoverlap_distribution(p, n, s.sweep()).row());
      return same(bgf_rows(nonoverlap_bgf(b), true, 0, 8), brute);
    });
  }
  s.check(9, "avoiders of 11' have B(x) = 1 + x and D matches C10, n<=8", [&] {
    const SR b = egf_of(s.counts({pat("11'", "fig1")}, 0, 8));
    const SR expected = SR::one(8) + SR::monomial(1, 8);
    const SY d = catalog("C10", {{"b", 0}}, 8).series;
    return Outcome{b == expected && d == nonoverlap_bgf(expected), text(lift<Poly1>(expected)), text(lift<Poly1>(b))};
  });
  s.check(9, "C11 is the avoider series of 122'1' and C10 matches its non-overlap rows, n<=8", [&] {
    const PopPattern p = pat("122'1'", "fig10");
    const Ints from_c11 = egf_slice(rational_part(catalog("C11", {}, 8).series), 0, 8);
    Rows brute;
    for (int n = 0; n <= 8; ++n) brute.push_back(nonoverlap_distribution(p, n, s.sweep()).row());
    const Rows c10 = bgf_rows(catalog("C10", {{"b", 1}}, 8).series, true, 0, 8);
    const Ints counts = s.counts({p}, 0, 8);
    return Outcome{from_c11 == counts && c10 == brute, text(counts) + " / " + text(brute),
                   text(from_c11) + " / " + text(c10)};
  });
  for (int k = 1; k <= 3; ++k) {
    s.check(9, "non-overlap distribution of 11' on words over [" + std::to_string(k) + "], n<=8", [&, k] {
      const PopPattern p = pat("11'", "fig1");
      Rows brute;
      Ints avoid;
      for (int n = 0; n <= 8; ++n) {
        brute.push_back(word_nonoverlap_distribution(p, n, k, s.sweep()).row());
        avoid.push_back(count_word_avoiders(p, n, k, s.sweep()));
      }
      Ints b_expected(9, Integer(0));
      b_expected[0] = 1;
      b_expected[1] = k;
      const Rows series = bgf_rows(catalog("C10", {{"words", k}}, 8).series, false, 0, 8);
      return Outcome{series == brute && avoid == b_expected, text(series) + " / B " + text(b_expected),
                     text(brute) + " / B " + text(avoid)};
    });
  }

  // Closed formulas for length-four patterns.
  auto formula = [&](const std::string& notation, const std::string& poset, int from,
                     const std::function<Integer(int)>& f) {
    s.check(10, "avoiders of " + notation + " by formula, n=" + std::to_string(from) + "..9", [&, notation, poset, from, f] {
      Ints expected;
      for (int n = from; n <= 9; ++n) expected.push_back(f(n));
      return same(expected, s.counts({pat(notation, poset)}, from, 9));
    });
  };
  formula("11'1''2", "fig10", 0, [](int n) -> Integer {
    return factorial(n) / (factorial(n / 3) * factorial((n + 1) / 3) * factorial((n + 2) / 3));
  });
  formula("11'21''", "fig10", 1, [](int n) -> Integer { return n * central(n - 1); });
  formula("1'1''12", "fig10", 2, [](int n) -> Integer { return Integer(n * (n - 1)); });
  formula("1'121''", "fig10", 2, [](int n) -> Integer { return Integer(n * (n - 1)); });
  formula("12'21'", "fig10", 1, [](int n) -> Integer { return central(n - 1) * central(n); });
  s.check(10, "1'1''12 and 1'121'' have A_0 = A_1 = 1", [&] {
    const Ints a = s.counts({pat("1'1''12", "fig10")}, 0, 1);
    const Ints b = s.counts({pat("1'121''", "fig10")}, 0, 1);
    return Outcome{a == Ints{1, 1} && b == Ints{1, 1}, "1 1 / 1 1", text(a) + " / " + text(b)};
  });
  s.check(10, "avoiders of both 11'22' and 22'11' number 2 C(n, n/2), n=3..9", [&] {
    Ints expected;
    for (int n = 3; n <= 9; ++n) expected.push_back(2 * central(n));
    return same(expected, s.counts({pat("11'22'", "fig10"), pat("22'11'", "fig10")}, 3, 9));
  });
  struct Form {
    std::string id;
    std::vector<std::string> notations;
  };
  for (const Form& f : {Form{"C11", {"122'1'"}}, Form{"C12", {"1231'"}}, Form{"C13", {"1321'", "2131'"}}}) {
    for (const auto& notation : f.notations) {
      s.check(10, f.id + " vs avoiders of " + notation + ", n<=9", [&, id = f.id, notation] {
        return same(egf_slice(rational_part(catalog(id, {}, 9).series), 0, 9), s.counts({pat(notation, "fig10")}, 0, 9));
      });
    }
  }

  s.check(11, "shuffle equation vs avoiders of 12-3-2'1', n<=8", [&] {
    return same(egf_slice(rational_part(catalog("C14", {{"tau", 1}}, 8).series), 0, 8),
                s.counts({pat("12-3-2'1'", "shuffle")}, 0, 8));
  });
  s.check(11, "12-3 avoiders are Bell numbers, n<=8", [&] {
    const SR bell = rational_part(catalog("C2", {}, 8).series);
    const SR shuffle = rational_part(catalog("C14", {{"tau", 0}}, 8).series);
    const Ints brute = s.counts({classical("12-3")}, 0, 8);
    return Outcome{bell == shuffle && egf_slice(bell, 0, 8) == brute, text(egf_slice(bell, 0, 8)), text(brute)};
  });
  s.check(11, "shuffle pattern invariant under trivial bijections of its blocks, n<=6", [&] {
    const Ints base = s.counts({pat("12-3-2'1'", "shuffle")}, 0, 6);
    Ints all;
    bool ok = true;
    for (const char* v : {"21-3-2'1'", "12-3-1'2'", "21-3-1'2'"}) {
      const Ints c = s.counts({pat(v, "shuffle")}, 0, 6);
      ok = ok && c == base;
      all.insert(all.end(), c.begin(), c.end());
    }
    return Outcome{ok, text(base), text(all)};
  });
  s.check(11, "two blocks of length 2: (1 - (1 + (x-1)e^x)^2)/(1 - x) vs 12-2'1', n<=8", [&] {
    return same(egf_slice(rational_part(catalog("C9", {{"k", 2}}, 8).series), 0, 8),
                s.counts({pat("12-2'1'", "fig10")}, 0, 8));
  });
  const PopPattern b1 = pat("11'2", "fig1");
  const PopPattern b2 = relabel(classical("21"), "x");
  s.check(11, "multi-pattern formula for 11'2 followed by 21, n<=8", [&] {
    const SR a1 = egf_of(s.counts({b1}, 0, 8));
    const SR a2 = egf_of(s.counts({b2}, 0, 8));
    return same(egf_slice(multi_pattern_egf({a1, a2}), 0, 8), s.counts({join_free(b1, b2)}, 0, 8));
  });
  s.check(11, "multi-pattern avoidance invariant under block order and trivial bijections, n<=6", [&] {
    const Ints base = s.counts({join_free(b1, b2)}, 0, 6);
    std::vector<PopPattern> variants{join_free(b2, b1), join_free(reverse(b1), b2), join_free(b1, complement(b2)),
                                     join_free(complement(reverse(b2)), reverse(b1))};
    Ints all;
    bool ok = true;
    for (const auto& v : variants) {
      const Ints c = s.counts({v}, 0, 6);
      ok = ok && c == base;
      all.insert(all.end(), c.begin(), c.end());
    }
    return Outcome{ok, text(base), text(all)};
  });
}

// --- qidentities -----------------------------------------------------------------

void qidentities(Suite& s) {
  auto report_outcome = [](const IdentityReport& r) {
    return Outcome{r.passed, r.identity + " n=" + std::to_string(r.n_min) + ".." + std::to_string(r.n_max),
                   r.passed ? "holds" : "fails at n=" + std::to_string(*r.failing_n) + ": " + r.expected + " vs " + r.computed};
  };
  struct Case {
    std::string notation;
    std::string poset;
  };
  const std::vector<Case> cases{{"11'", "fig1"}, {"11'2", "fig1"}, {"122'1'", "fig10"}};
  for (const auto& c : cases) {
    s.check(12, "quasi-avoiders B_n = [n]_q A_{n-1} - A_n for " + c.notation + ", n<=7",
            [&] { return report_outcome(verify_lemma_B(pat(c.notation, c.poset), 7, s.sweep())); });
  }
  s.check(12, "split identity for 11' followed by a single letter, n<=6", [&] {
    return report_outcome(verify_lemma_split(pat("11'", "fig1"), parse_pattern("a", bundled_poset("single")), 6, s.sweep()));
  });
  s.check(12, "split identity for 12 followed by an incomparable 12, n<=6", [&] {
    return report_outcome(verify_lemma_split(classical("12"), relabel(classical("12"), "'"), 6, s.sweep()));
  });
  s.check(12, "q multi-pattern identity for blocks 11' and 12, n<=6", [&] {
    const PopPattern first = parse_pattern("11'", Poset::antichain({"1", "1'"}));
    const PopPattern second = relabel(classical("12"), "x");
    return report_outcome(verify_q_multipattern({first, second}, 6, s.sweep()));
  });
  s.check(12, "q multi-pattern identity for three blocks 11'2, 12, 21, n<=6", [&] {
    return report_outcome(verify_q_multipattern(
        {pat("11'2", "fig1"), relabel(classical("12"), "x"), relabel(classical("21"), "z")}, 6, s.sweep()));
  });
  s.check(12, "q multi-pattern identity with one block, n<=6",
          [&] { return report_outcome(verify_q_multipattern({pat("11'2", "fig1")}, 6, s.sweep())); });
  for (const auto& c : cases) {
    s.check(12, "q non-overlap identity for " + c.notation + ", n<=7",
            [&] { return report_outcome(verify_q_nonoverlap(pat(c.notation, c.poset), 7, s.sweep())); });
    s.check(12, "q non-overlap identity at q=1 reduces to the exponential form for " + c.notation + ", n<=7", [&] {
      const PopPattern p = pat(c.notation, c.poset);
      const QEgf a = q_egf(q_avoiders(p, 7, s.sweep()));
      const SY at1 = to_egf_at_q1(q_mul(a, q_geom_inverse(quasi_from_avoiders(a))));
      const SY plain = nonoverlap_bgf(egf_of(s.counts({p}, 0, 7)));
      return Outcome{at1 == plain, text(plain), text(at1)};
    });
  }
  s.check(12, "sum of q^inv over S_n is [n]_q!, n<=7", [&] {
    bool ok = true;
    const auto all = q_avoiders(std::vector<PopPattern>{}, 7, s.sweep());
    for (int n = 0; n <= 7; ++n) ok = ok && all[static_cast<std::size_t>(n)] == q_factorial(n);
    return Outcome{ok, "[n]_q! for n=0..7", ok ? "equal" : "differs"};
  });
}

// --- counimodal ------------------------------------------------------------------

void counimodal(Suite& s) {
  for (const char* sigma : {"21", "4123", "4312"}) {
    s.check(13, std::string("maj and inv equidistributed jointly with maj_") + sigma + " of the inverse, n<=7", [&, sigma] {
      const Matcher m(classical(sigma));
      StatFn t = [&m](std::span<const int> p) {
        std::vector<int> inv_p(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) inv_p[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
        return maj_sigma(m, inv_p);
      };
      bool ok = true;
      std::string first_bad;
      for (int n = 1; n <= 7 && ok; ++n) {
        const auto a = joint_distribution("t", t, "q", named_statistic("maj"), n, {}, s.sweep());
        const auto b = joint_distribution("t", t, "q", named_statistic("inv"), n, {}, s.sweep());
        if (a.cells() != b.cells()) {
          ok = false;
          first_bad = "n=" + std::to_string(n) + ": " + text(a) + " vs " + text(b);
        }
      }
      return Outcome{ok, "equal tables for n=1..7", ok ? "equal" : first_bad};
    });
  }
  s.check(13, "maj and inv equidistributed (t=1 margin), n<=7", [&] {
    bool ok = true;
    for (int n = 0; n <= 7; ++n) {
      ok = ok && stat_distribution("s", named_statistic("maj"), n, {}, s.sweep()).cells() ==
                     stat_distribution("s", named_statistic("inv"), n, {}, s.sweep()).cells();
    }
    return Outcome{ok, "equal for n=0..7", ok ? "equal" : "differs"};
  });
}

// --- bijections --------------------------------------------------------------------

void bijections(Suite& s) {
  for (int k : {2, 3, 4}) {
    s.check(14, "cycles of length <=" + std::to_string(k) + " <-> S_n(a-a1..a" + std::to_string(k) + "), n<=8", [&, k] {
      const PopPattern p = flat_dashed_pattern(k);
      for (int n = 0; n <= 8; ++n) {
        std::set<Permutation> image;
        PermutationStream ps(n);
        while (ps.next()) {
          const Permutation pi(std::vector<int>(ps.current().begin(), ps.current().end()));
          bool short_cycles = true;
          for (const auto& c : cycles(pi)) short_cycles = short_cycles && static_cast<int>(c.size()) <= k;
          if (!short_cycles) continue;
          const Permutation sigma = cycles_to_avoider(pi, k);
          if (avoider_to_cycles(sigma, k) != pi) {
            return Outcome{false, "round trip", "fails at " + pi.to_string()};
          }
          image.insert(sigma);
        }
        const auto avoiders = avoider_set({p}, n, s.sweep());
        if (std::set<Permutation>(avoiders.begin(), avoiders.end()) != image) {
          return Outcome{false, "image = avoiders", "differs at n=" + std::to_string(n)};
        }
        for (const auto& sigma : avoiders) {
          if (cycles_to_avoider(avoider_to_cycles(sigma, k), k) != sigma) {
            return Outcome{false, "round trip", "fails at " + sigma.to_string()};
          }
        }
      }
      return Outcome{true, "bijection for n=0..8", "bijection for n=0..8"};
    });
  }
  s.check(14, "face 110x0y01 maps to 389457621", [&] {
    const Permutation p = face_to_good_perm(HypercubeFace::parse("110x0y01"));
    return Outcome{p == Permutation::parse("389457621"), "389457621", p.to_string()};
  });
  for (int n = 1; n <= 7; ++n) {
    s.check(14, "faces of the " + std::to_string(n + 1) + "-cube biject onto good " + std::to_string(n + 2) + "-permutations",
            [&, n] {
              const FaceReport r = verify_faces(n);
              std::ostringstream c;
              c << "faces " << r.faces << ", distinct images " << r.distinct_images << ", good "
                << r.good_permutations << (r.all_images_good ? "" : ", image differs from good set");
              return Outcome{r.passed(), "C(n+1,2) 2^(n-1) = " + std::to_string(r.expected), c.str()};
            });
  }
}

// --- openproblems ----------------------------------------------------------------

void openproblems(Suite& s) {
  const CsvTable t = golden("openproblems");
  const auto cn = t.column("name");
  const auto cp = t.column("patterns");
  const auto cf = t.column("first_n");
  const auto cv = t.column("values");
  const auto cs = t.column("slow_value");
  for (const auto& row : t.rows) {
    s.check(15, "avoiders for " + row[cn], [&] {
      std::vector<PopPattern> patterns;
      std::stringstream list(row[cp]);
      std::string item;
      while (std::getline(list, item, ';')) {
        const auto at = item.find('@');
        if (at == std::string::npos) throw Error("golden: pattern without poset: " + item);
        patterns.push_back(pat(item.substr(0, at), item.substr(at + 1)));
      }
      Ints expected = ints(parse_integers(row[cv]));
      if (s.options().slow && !row[cs].empty()) expected.push_back(Integer(row[cs]));
      const int first = std::stoi(row[cf]);
      return same(expected, s.counts(patterns, first, first + static_cast<int>(expected.size()) - 1));
    });
  }
}

// --- structural --------------------------------------------------------------------

SY random_series(std::mt19937& rng, int order, bool unit) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  return SY::generate(order, [&](int n) {
    std::vector<Rational> c;
    for (int i = 0; i < 3; ++i) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      c.push_back(r);
    }
    if (n == 0 && unit) return Poly1(Rational(1 + den(rng)));
    return Poly1(c);
  });
}

void structural(Suite& s) {
  s.check(2, "|S_n(11'2)| = C(n, floor(n/2)), n<=10", [&] {
    Ints expected;
    for (int n = 0; n <= 10; ++n) expected.push_back(central(n));
    return same(expected, s.counts({pat("11'2", "fig1")}, 0, 10));
  });

  s.check(16, "modified maxima = modified minima + 1 and the four statistics sum to n, n=1..8", [&] {
    for (int n = 1; n <= 8; ++n) {
      PermutationStream ps(n);
      while (ps.next()) {
        const auto p = ps.current();
        const int mx = modified_maxima(p), mn = modified_minima(p);
        if (mx != mn + 1 || mx + mn + double_rises(p) + double_falls(p) != n) {
          return Outcome{false, "identities hold", "fails at n=" + std::to_string(n)};
        }
      }
    }
    return Outcome{true, "identities hold", "identities hold"};
  });
  s.check(16, "alternating permutations counted by tan x + sec x, n<=9", [&] {
    Ints computed;
    for (int n = 0; n <= 9; ++n) {
      long c = 0;
      PermutationStream ps(n);
      while (ps.next()) c += is_alternating(ps.current());
      computed.emplace_back(c);
    }
    return same(egf_slice(rational_part(catalog("C16", {}, 9).series), 0, 9), computed);
  });
  s.check(16, "(1-t)^(n+1) sum_k k^n t^k is the Eulerian polynomial, n=1..8, t-order 12", [&] {
    for (int n = 1; n <= 8; ++n) {
      Ints euler(13, Integer(0));
      for (const auto& [v, c] : stat_distribution("des", named_statistic("des"), n, {}, s.sweep()).marginal(0)) {
        euler[static_cast<std::size_t>(v + 1)] += c;
      }
      const SR lhs = rational_part(catalog("C17", {{"n", n}}, 12).series);
      Ints computed;
      for (int j = 0; j <= 12; ++j) {
        if (!is_integral(lhs[j])) return Outcome{false, text(euler), "non-integer coefficient"};
        computed.push_back(lhs[j].get_num());
      }
      if (computed != euler) return same(euler, computed);
    }
    return Outcome{true, "identity for n=1..8", "identity for n=1..8"};
  });
  s.check(16, "ring laws on random series triples, order 12", [&] {
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 5; ++trial) {
      const SY a = random_series(rng, 12, false), b = random_series(rng, 12, false), c = random_series(rng, 12, false);
      if ((a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c || a * b != b * a || (a + b) - b != a) {
        return Outcome{false, "laws hold", "fails on trial " + std::to_string(trial)};
      }
    }
    return Outcome{true, "laws hold", "laws hold"};
  });
  s.check(16, "sqrt(f)^2 = f and (fg)/g = f, order 12", [&] {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
      SY f = random_series(rng, 12, false);
      f.coeff(0) = Poly1(1);
      const SY g = random_series(rng, 12, true);
      const SY r = sqrt(f);
      if (r * r != f || divide(f * g, g) != f) return Outcome{false, "identities hold", "fails on trial " + std::to_string(trial)};
    }
    return Outcome{true, "identities hold", "identities hold"};
  });
  s.check(16, "differential equation solutions leave zero residual, order 12", [&] {
    for (auto [k, l] : {std::pair{1, 0}, std::pair{2, 0}, std::pair{3, 0}, std::pair{1, 1}, std::pair{1, 2}}) {
      const SY p = flat_distribution_ode(k, l, 12);
      const SY gk = lift<Poly1>(geometric_poly(k, 12));
      const SY gl = lift<Poly1>(geometric_poly(l, 12));
      const Poly1 y = Poly1::variable();
      QuadraticRhs<Poly1> rhs{(y - Poly1(1)) * (gk * gl), (Poly1(1) - y) * (gk + gl), SY::constant(y, 12)};
      if (!(ode_residual(rhs, p) == SY(11))) {
        return Outcome{false, "zero residual", "nonzero for (" + std::to_string(k) + "," + std::to_string(l) + ")"};
      }
    }
    const SR e = exp_series(1, 12);
    const SR c = shuffle_ode(e, e, 12);
    QuadraticRhs<Rational> rhs{-(e * e), e + e, SR(12)};
    if (!(ode_residual(rhs, c) == SR(11))) return Outcome{false, "zero residual", "nonzero for the shuffle equation"};
    return Outcome{true, "zero residual", "zero residual"};
  });

  s.check(17, "circular maxima: exactly one interpretation matches the closed form, n<=7", [&] {
    const Rows gf = bgf_rows(catalog("C15", {}, 7).series, true, 1, 7);
    Rows linear, rotation;
    for (int n = 1; n <= 7; ++n) {
      linear.push_back(circular_maxima_distribution(n, false, s.sweep()).row());
      rotation.push_back(circular_maxima_distribution(n, true, s.sweep()).row());
    }
    const bool lin = linear == gf;
    const bool rot = rotation == gf;
    s.note(std::string("circular maxima: closed form matches ") +
           (lin && !rot ? "all n! linear arrangements" : rot && !lin ? "rotation classes" : lin ? "both" : "neither"));
    return Outcome{lin != rot, text(gf),
                   std::string(lin ? "linear arrangements match" : "linear arrangements differ") + "; " +
                       (rot ? "rotation classes match" : "rotation classes differ")};
  });
}

const std::vector<std::pair<std::string, void (*)(Suite&)>>& registry() {
  static const std::vector<std::pair<std::string, void (*)(Suite&)>> r = {
      {"table1", table1},           {"structural", structural},   {"flatposet", flatposet},
      {"restricted", restricted},   {"series-closedforms", closedforms}, {"qidentities", qidentities},
      {"counimodal", counimodal},   {"bijections", bijections},   {"openproblems", openproblems},
  };
  return r;
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

nlohmann::json SuiteReport::to_json(bool timings) const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j = {{"criterion", c.criterion},
                        {"name", c.name},
                        {"status", c.passed ? "pass" : "fail"},
                        {"expected", c.expected},
                        {"computed", c.computed}};
    if (timings) j["millis"] = c.millis;
    list.push_back(j);
  }
  nlohmann::json j = {{"suite", suite}, {"status", passed() ? "pass" : "fail"}, {"checks", list}, {"notes", notes}};
  if (timings) j["millis"] = millis;
  return j;
}

std::string SuiteReport::to_text(bool timings) const {
  std::ostringstream out;
  out << "suite " << suite << '\n';
  for (const auto& c : checks) {
    out << "  [" << (c.passed ? "pass" : "FAIL") << "] AC" << c.criterion << ' ' << c.name;
    if (timings) out << " (" << static_cast<long>(c.millis) << " ms)";
    out << '\n';
    if (!c.passed) {
      out << "      expected: " << c.expected << '\n';
      out << "      computed: " << c.computed << '\n';
    }
  }
  for (const auto& n : notes) out << "  note: " << n << '\n';
  out << "suite " << suite << ": " << (passed() ? "pass" : "FAIL") << '\n';
  return out.str();
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "all") {
    Suite all("all", opts);
    SuiteReport merged = all.take();
    for (const auto& [n, fn] : registry()) {
      Suite s(n, opts);
      fn(s);
      SuiteReport r = s.take();
      merged.millis += r.millis;
      for (auto& c : r.checks) {
        c.name = n + ": " + c.name;
        merged.checks.push_back(std::move(c));
      }
      merged.notes.insert(merged.notes.end(), r.notes.begin(), r.notes.end());
    }
    return merged;
  }
  for (const auto& [n, fn] : registry()) {
    if (n == name) {
      Suite s(n, opts);
      fn(s);
      return s.take();
    }
  }
  throw Error("unknown suite '" + name + "'");
}

}  // namespace poplab
