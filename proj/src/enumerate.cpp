#include "poplab/enumerate.hpp"

#include <cstdlib>

#include "poplab/error.hpp"
#include "poplab/stats.hpp"

namespace poplab {

int default_enumeration_limit() {
  if (const char* env = std::getenv("POPLAB_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(v);
  }
  return 11;
}

void check_limit(int n, const SweepOptions& opts) {
  if (n < 0) throw Error("enumeration: negative size");
  if (n > opts.max_n) {
    throw LimitError("enumeration of size " + std::to_string(n) + " exceeds the limit " +
                     std::to_string(opts.max_n) + " (set POPLAB_MAX_N to raise it)");
  }
}

Restriction::Restriction(const std::vector<PopPattern>& patterns) {
  for (const auto& p : patterns) matchers_.emplace_back(p);
}

bool Restriction::admits(std::span<const int> seq) const {
  for (const auto& m : matchers_)
    if (m.occurs(seq)) return false;
  return true;
}

StatFn named_statistic(const std::string& name) {
  if (name == "inv") return [](std::span<const int> p) { return inv(p); };
  if (name == "maj") return [](std::span<const int> p) { return maj(p); };
  if (name == "des") return [](std::span<const int> p) { return des(p); };
  if (name == "peaks") return [](std::span<const int> p) { return peaks(p); };
  if (name == "valleys") return [](std::span<const int> p) { return valleys(p); };
  if (name == "modmax") return [](std::span<const int> p) { return modified_maxima(p); };
  if (name == "modmin") return [](std::span<const int> p) { return modified_minima(p); };
  if (name == "drises") return [](std::span<const int> p) { return double_rises(p); };
  if (name == "dfalls") return [](std::span<const int> p) { return double_falls(p); };
  if (name == "cmax") return [](std::span<const int> p) { return circular_maxima(p); };
  if (name == "ltrmin") {
    return [](std::span<const int> p) { return static_cast<int>(left_to_right_minima(p).size()); };
  }
  throw Error("unknown statistic '" + name + "'");
}

Integer count_avoiders(const std::vector<PopPattern>& patterns, int n, const SweepOptions& opts) {
  auto table = sweep_permutations<1>(n, {"all"}, Restriction(patterns),
                                     [](std::span<const int>) { return std::array<int, 1>{0}; },
                                     opts);
  return table.total();
}

std::vector<Integer> avoider_sequence(const std::vector<PopPattern>& patterns, int n_max,
                                      const SweepOptions& opts) {
  check_limit(n_max, opts);
  std::vector<Integer> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(count_avoiders(patterns, n, opts));
  return out;
}

std::vector<Permutation> avoider_set(const std::vector<PopPattern>& patterns, int n,
                                     const SweepOptions& opts) {
  check_limit(n, opts);
  Restriction r(patterns);
  std::vector<Permutation> out;
  PermutationStream s(n);
  while (s.next()) {
    if (r.admits(s.current())) out.emplace_back(std::vector<int>(s.current().begin(), s.current().end()));
  }
  return out;
}

DistributionTable distribution(const PopPattern& p, int n, const std::vector<PopPattern>& restriction,
                               const SweepOptions& opts) {
  const Matcher m(p);
  return sweep_permutations<1>(
      n, {"occurrences"}, Restriction(restriction),
      [&m](std::span<const int> seq) { return std::array<int, 1>{static_cast<int>(m.count(seq))}; },
      opts);
}

DistributionTable nonoverlap_distribution(const PopPattern& p, int n, const SweepOptions& opts) {
  if (!p.is_segmented()) throw Error("nonoverlap_distribution: pattern must be segmented");
  const Matcher m(p);
  return sweep_permutations<1>(
      n, {"nonoverlap"}, Restriction(),
      [&m](std::span<const int> seq) { return std::array<int, 1>{m.max_nonoverlapping(seq)}; },
      opts);
}

DistributionTable word_nonoverlap_distribution(const PopPattern& p, int n, int k,
                                               const SweepOptions& opts) {
  if (!p.is_segmented()) throw Error("word_nonoverlap_distribution: pattern must be segmented");
  const Matcher m(p);
  return sweep_words<1>(
      n, k, {"nonoverlap"},
      [&m](std::span<const int> seq) { return std::array<int, 1>{m.max_nonoverlapping(seq)}; },
      opts);
}

Integer count_word_avoiders(const PopPattern& p, int n, int k, const SweepOptions& opts) {
  const Matcher m(p);
  auto table = sweep_words<1>(
      n, k, {"avoids"},
      [&m](std::span<const int> seq) { return std::array<int, 1>{m.occurs(seq) ? 0 : 1}; }, opts);
  return table.at({1});
}

DistributionTable stat_distribution(const std::string& name, const StatFn& stat, int n,
                                    const std::vector<PopPattern>& restriction,
                                    const SweepOptions& opts) {
  return sweep_permutations<1>(
      n, {name}, Restriction(restriction),
      [&stat](std::span<const int> seq) { return std::array<int, 1>{stat(seq)}; }, opts);
}

DistributionTable joint_distribution(const std::string& name1, const StatFn& stat1,
                                     const std::string& name2, const StatFn& stat2, int n,
                                     const std::vector<PopPattern>& restriction,
                                     const SweepOptions& opts) {
  return sweep_permutations<2>(
      n, {name1, name2}, Restriction(restriction),
      [&](std::span<const int> seq) { return std::array<int, 2>{stat1(seq), stat2(seq)}; }, opts);
}

DistributionTable circular_maxima_distribution(int n, bool rotation_classes, const SweepOptions& opts) {
  check_limit(n, opts);
  if (!rotation_classes) return stat_distribution("cmax", named_statistic("cmax"), n, {}, opts);
  DistributionTable table(n, {"cmax"});
  if (n == 0) {
    table.add({0}, 1);
    return table;
  }
  PermutationStream s(n, 1);
  while (s.next()) table.add({circular_maxima(s.current())}, 1);
  return table;
}

}  // namespace poplab
