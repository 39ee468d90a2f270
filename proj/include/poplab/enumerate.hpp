#pragma once

// Exhaustive sweeps over S_n and [k]^n. A sweep is split into shards by the
// first letter; shards run on up to `jobs` threads and their partial tables
// are merged by exact addition, so results do not depend on scheduling.

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "poplab/pattern.hpp"
#include "poplab/permutation.hpp"
#include "poplab/table.hpp"

namespace poplab {

/// Default size guard (11), overridden by POPLAB_MAX_N.
int default_enumeration_limit();

struct SweepOptions {
  int jobs = 1;
  int max_n = default_enumeration_limit();
};

/// Throws LimitError when n exceeds the guard.
void check_limit(int n, const SweepOptions& opts);

/// Ground-set filter: keeps sequences avoiding every listed pattern.
class Restriction {
 public:
  Restriction() = default;
  explicit Restriction(const std::vector<PopPattern>& patterns);
  bool admits(std::span<const int> seq) const;
  bool empty() const noexcept { return matchers_.empty(); }

 private:
  std::vector<Matcher> matchers_;
};

using StatFn = std::function<int(std::span<const int>)>;

/// Known statistic by name: inv, maj, des, peaks, valleys, modmax, modmin,
/// drises, dfalls, cmax, ltrmin. Throws on an unknown name.
StatFn named_statistic(const std::string& name);

namespace detail {

template <std::size_t K, class Stream, class KeyFn>
DistributionTable run_sweep(int shards, const std::function<Stream(int)>& open, int n,
                            std::vector<std::string> axes, const Restriction& restriction,
                            const KeyFn& key, const SweepOptions& opts) {
  using Key = std::array<int, K>;
  std::map<Key, unsigned long long> merged;
  std::mutex merge_lock;
  std::atomic<int> next_shard{0};

  auto worker = [&] {
    for (int s = next_shard++; s < shards; s = next_shard++) {
      std::map<Key, unsigned long long> local;
      Stream stream = open(s);
      while (stream.next()) {
        const auto seq = stream.current();
        if (!restriction.admits(seq)) continue;
        ++local[key(seq)];
      }
      std::lock_guard<std::mutex> guard(merge_lock);
      for (const auto& [k, c] : local) merged[k] += c;
    }
  };

  const int threads = std::clamp(opts.jobs, 1, std::max(shards, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  DistributionTable table(n, std::move(axes));
  for (const auto& [k, c] : merged) {
    table.add(std::vector<int>(k.begin(), k.end()), Integer(std::to_string(c)));
  }
  return table;
}

}  // namespace detail

/// Tabulates key(pi) over the permutations of S_n admitted by `restriction`.
/// KeyFn maps a sequence to std::array<int, K>.
template <std::size_t K, class KeyFn>
DistributionTable sweep_permutations(int n, std::vector<std::string> axes,
                                     const Restriction& restriction, const KeyFn& key,
                                     const SweepOptions& opts = {}) {
  check_limit(n, opts);
  const int shards = std::max(n, 1);
  std::function<PermutationStream(int)> open = [n](int s) {
    return n == 0 ? PermutationStream(0) : PermutationStream(n, s + 1);
  };
  return detail::run_sweep<K, PermutationStream>(shards, open, n, std::move(axes), restriction,
                                                 key, opts);
}

/// Same over the words [k]^n.
template <std::size_t K, class KeyFn>
DistributionTable sweep_words(int n, int k, std::vector<std::string> axes, const KeyFn& key,
                              const SweepOptions& opts = {}) {
  check_limit(n, opts);
  const int shards = n == 0 ? 1 : std::max(k, 1);
  std::function<WordStream(int)> open = [n, k](int s) {
    return n == 0 ? WordStream(0, k) : WordStream(n, k, s + 1);
  };
  return detail::run_sweep<K, WordStream>(shards, open, n, std::move(axes), Restriction(), key,
                                          opts);
}

Integer count_avoiders(const std::vector<PopPattern>& patterns, int n, const SweepOptions& opts = {});
/// Entry n is |S_n(patterns)| for n = 0..n_max.
std::vector<Integer> avoider_sequence(const std::vector<PopPattern>& patterns, int n_max,
                                      const SweepOptions& opts = {});
/// The avoiders themselves, in lexicographic order.
std::vector<Permutation> avoider_set(const std::vector<PopPattern>& patterns, int n,
                                     const SweepOptions& opts = {});

/// Permutations (optionally restricted) by number of occurrences of p.
DistributionTable distribution(const PopPattern& p, int n,
                               const std::vector<PopPattern>& restriction = {},
                               const SweepOptions& opts = {});
/// Permutations by maximum number of non-overlapping occurrences of p.
DistributionTable nonoverlap_distribution(const PopPattern& p, int n, const SweepOptions& opts = {});
DistributionTable word_nonoverlap_distribution(const PopPattern& p, int n, int k,
                                               const SweepOptions& opts = {});
Integer count_word_avoiders(const PopPattern& p, int n, int k, const SweepOptions& opts = {});

DistributionTable stat_distribution(const std::string& name, const StatFn& stat, int n,
                                    const std::vector<PopPattern>& restriction = {},
                                    const SweepOptions& opts = {});
DistributionTable joint_distribution(const std::string& name1, const StatFn& stat1,
                                     const std::string& name2, const StatFn& stat2, int n,
                                     const std::vector<PopPattern>& restriction = {},
                                     const SweepOptions& opts = {});

/// Circular maxima over all n! linear arrangements, or over one
/// representative per rotation class (those starting with 1).
DistributionTable circular_maxima_distribution(int n, bool rotation_classes,
                                               const SweepOptions& opts = {});

}  // namespace poplab
