#include "poplab/qstats.hpp"

#include "poplab/error.hpp"
#include "poplab/stats.hpp"

namespace poplab {

namespace {

Poly1 q_row(const DistributionTable& t, std::size_t value_axis, std::optional<int> filter = {}) {
  std::vector<Rational> c;
  for (const auto& [key, count] : t.cells()) {
    if (filter && key[0] != *filter) continue;
    const auto e = static_cast<std::size_t>(key[value_axis]);
    if (c.size() <= e) c.resize(e + 1, Rational(0));
    c[e] += Rational(count);
  }
  return Poly1(std::move(c));
}

std::string text(const Poly2& p) { return p.to_string("y"); }

// Compares two q-series coefficientwise over n_min..n_max.
IdentityReport compare(std::string identity, int n_min, int n_max, const QEgf& lhs, const QEgf& rhs) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.n_min = n_min;
  r.n_max = n_max;
  for (int n = n_min; n <= n_max; ++n) {
    if (lhs[n] != rhs[n]) {
      r.passed = false;
      r.failing_n = n;
      r.expected = text(lhs[n]);
      r.computed = text(rhs[n]);
      break;
    }
  }
  return r;
}

}  // namespace

std::vector<Poly1> q_avoiders(const std::vector<PopPattern>& patterns, int n_max, const SweepOptions& opts) {
  check_limit(n_max, opts);
  std::vector<Poly1> out;
  for (int n = 0; n <= n_max; ++n) {
    auto t = sweep_permutations<1>(
        n, {"inv"}, Restriction(patterns),
        [](std::span<const int> s) { return std::array<int, 1>{inv(s)}; }, opts);
    out.push_back(q_row(t, 0));
  }
  return out;
}

std::vector<Poly1> q_avoiders(const PopPattern& p, int n_max, const SweepOptions& opts) {
  return q_avoiders(std::vector<PopPattern>{p}, n_max, opts);
}

std::vector<Poly1> q_quasi_avoiders(const PopPattern& p, int n_max, const SweepOptions& opts) {
  if (!p.is_segmented() || p.anchored_left() || p.anchored_right()) {
    throw Error("q_quasi_avoiders: pattern must be segmented and unanchored");
  }
  check_limit(n_max, opts);
  const Matcher m(p);
  std::vector<Poly1> out;
  for (int n = 0; n <= n_max; ++n) {
    auto t = sweep_permutations<2>(
        n, {"quasi", "inv"}, Restriction(),
        [&m](std::span<const int> s) {
          return std::array<int, 2>{m.quasi_avoided_by(s) ? 1 : 0, inv(s)};
        },
        opts);
    out.push_back(q_row(t, 1, 1));
  }
  return out;
}

std::vector<Poly2> q_nonoverlap(const PopPattern& p, int n_max, const SweepOptions& opts) {
  if (!p.is_segmented()) throw Error("q_nonoverlap: pattern must be segmented");
  check_limit(n_max, opts);
  const Matcher m(p);
  std::vector<Poly2> out;
  for (int n = 0; n <= n_max; ++n) {
    auto t = sweep_permutations<2>(
        n, {"nonoverlap", "inv"}, Restriction(),
        [&m](std::span<const int> s) { return std::array<int, 2>{m.max_nonoverlapping(s), inv(s)}; },
        opts);
    std::vector<Poly1> by_y;
    for (const auto& [key, count] : t.cells()) {
      const auto yk = static_cast<std::size_t>(key[0]);
      if (by_y.size() <= yk) by_y.resize(yk + 1);
      by_y[yk] += Poly1::monomial(Rational(count), static_cast<std::size_t>(key[1]));
    }
    out.push_back(Poly2(std::move(by_y)));
  }
  return out;
}

nlohmann::json IdentityReport::to_json() const {
  nlohmann::json j;
  j["identity"] = identity;
  j["n_range"] = {n_min, n_max};
  j["status"] = passed ? "pass" : "fail";
  j["first_failure"] = nullptr;
  if (failing_n) {
    j["first_failure"] = {{"n", *failing_n}, {"expected", expected}, {"computed", computed}};
  }
  return j;
}

QEgf q_egf(const std::vector<Poly1>& table) { return QEgf::from_q(table); }

QEgf quasi_from_avoiders(const QEgf& a) {
  return q_x_times(a).truncated(a.order()) - a + QEgf::one(a.order());
}

IdentityReport verify_lemma_B(const PopPattern& p, int n_max, const SweepOptions& opts) {
  const auto a = q_avoiders(p, n_max, opts);
  const auto b = q_quasi_avoiders(p, n_max, opts);
  IdentityReport r;
  r.identity = "B_n(q) = [n]_q A_{n-1}(q) - A_n(q)";
  r.n_min = 1;
  r.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const Poly1 rhs = q_integer(n) * a[i - 1] - a[i];
    if (b[i] != rhs) {
      r.passed = false;
      r.failing_n = n;
      r.expected = b[i].to_string("q");
      r.computed = rhs.to_string("q");
      break;
    }
  }
  return r;
}

IdentityReport verify_lemma_split(const PopPattern& p, const PopPattern& sigma, int n_max,
                                  const SweepOptions& opts) {
  if (!p.is_segmented()) throw Error("verify_lemma_split: p must be segmented");
  for (const auto& l : sigma.letters()) {
    if (p.poset().contains(l)) throw Error("verify_lemma_split: alphabets share letter '" + l + "'");
  }
  const PopPattern joined = join_free(p, sigma);
  const QEgf lhs = q_egf(q_avoiders(joined, n_max, opts));
  const QEgf ap = q_egf(q_avoiders(p, n_max, opts));
  const QEgf as = q_egf(q_avoiders(sigma, n_max, opts));
  const QEgf bp = q_egf(q_quasi_avoiders(p, n_max, opts));
  return compare("A^P_q = A^p_q + A^sigma_q B^p_q", 0, n_max, lhs, ap + q_mul(as, bp));
}

IdentityReport verify_q_multipattern(const std::vector<PopPattern>& blocks, int n_max,
                                     const SweepOptions& opts) {
  if (blocks.empty()) throw Error("verify_q_multipattern: no blocks");
  PopPattern joined = blocks.front();
  for (std::size_t i = 1; i < blocks.size(); ++i) joined = join_free(joined, blocks[i]);
  for (const auto& b : blocks) {
    if (!b.is_segmented()) throw Error("verify_q_multipattern: blocks must be segmented");
  }
  const QEgf lhs = q_egf(q_avoiders(joined, n_max, opts));
  QEgf sum(n_max);
  QEgf prod = QEgf::one(n_max);
  for (const auto& b : blocks) {
    const QEgf a = q_egf(q_avoiders(b, n_max, opts));
    sum = sum + q_mul(a, prod);
    prod = q_mul(prod, quasi_from_avoiders(a));
  }
  return compare("A^P_q = sum_i A^{p_i}_q prod_{j<i} ((x-1)A^{p_j}_q + 1)", 0, n_max, lhs, sum);
}

IdentityReport verify_q_nonoverlap(const PopPattern& p, int n_max, const SweepOptions& opts) {
  const auto rows = q_nonoverlap(p, n_max, opts);
  const QEgf lhs(rows, n_max);
  const QEgf a = q_egf(q_avoiders(p, n_max, opts));
  const QEgf rhs = q_mul(a, q_geom_inverse(quasi_from_avoiders(a)));
  return compare("sum y^N q^inv x^n/[n]_q! = A/(1 - y((x-1)A + 1))", 0, n_max, lhs, rhs);
}

}  // namespace poplab
