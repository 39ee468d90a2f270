#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "poplab/dsl.hpp"
#include "poplab/error.hpp"
#include "poplab/kernels.hpp"
#include "poplab/pattern.hpp"
#include "poplab/stats.hpp"

using namespace poplab;

namespace {

// Random pattern of length 1..4 over a random poset on its letters.
PopPattern random_pattern(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<int> coin(0, 2);
  const int m = len(rng);
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  // Relations only from lower to higher index of a random linear order keep it acyclic.
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Poset::Relation> rel;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (coin(rng) == 0) rel.emplace_back(labels[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])],
                                           labels[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])]);
  std::vector<Gap> gaps;
  for (int i = 0; i + 1 < m; ++i) gaps.push_back(static_cast<Gap>(coin(rng)));
  std::shuffle(labels.begin(), labels.end(), rng);
  const bool al = coin(rng) == 0, ar = coin(rng) == 0;
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  return PopPattern(Poset::build(sorted, rel), labels, gaps, al, ar);
}

std::vector<int> rev(std::span<const int> p) { return {p.rbegin(), p.rend()}; }
std::vector<int> comp(std::span<const int> p) {
  std::vector<int> c;
  for (int v : p) c.push_back(static_cast<int>(p.size()) + 1 - v);
  return c;
}

}  // namespace

TEST_SUITE("pattern") {
  TEST_CASE("construction errors") {
    const Poset p = Poset::chain({"1", "2"});
    CHECK_THROWS_AS(PopPattern(p, {"1", "3"}, {Gap::adjacent}), Error);
    CHECK_THROWS_AS(PopPattern(p, {"1", "1"}, {Gap::adjacent}), Error);
    CHECK_THROWS_AS(PopPattern(p, {"1", "2"}, {}), Error);
  }

  TEST_CASE("known counts") {
    const std::vector<int> s{3, 1, 4, 2, 5};
    CHECK(count_occurrences(parse_pattern("12"), s) == 2);
    CHECK(count_occurrences(parse_pattern("1-2"), s) == 7);
    CHECK(count_occurrences(parse_pattern("1~2"), s) == 5);
    CHECK(count_occurrences(parse_pattern("[1-2"), s) == 2);
    CHECK(count_occurrences(parse_pattern("2-1]"), s) == 0);
    CHECK(avoids(parse_pattern("321"), s));
    CHECK_FALSE(avoids(parse_pattern("2-1"), s));
  }

  TEST_CASE("matcher agrees with the exhaustive oracle on random patterns") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 150; ++trial) {
      const PopPattern p = random_pattern(rng);
      const Matcher m(p);
      for (int n = 0; n <= 6; ++n) {
        for (const auto& s : oracle::all_perms(n)) {
          const std::size_t expected = oracle::count(p, s);
          REQUIRE(m.count(s) == expected);
          REQUIRE(m.occurs(s) == (expected > 0));
          REQUIRE(m.occurrences(s).size() == expected);
        }
      }
    }
  }

  TEST_CASE("reverse and complement commute with counting") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
      const PopPattern p = random_pattern(rng);
      for (const auto& s : oracle::all_perms(5)) {
        const std::size_t c = count_occurrences(p, s);
        CHECK(count_occurrences(reverse(p), rev(s)) == c);
        CHECK(count_occurrences(complement(p), comp(s)) == c);
      }
      CHECK(reverse(reverse(p)) == p);
      CHECK(complement(complement(p)) == p);
    }
  }

  TEST_CASE("words: equal letters satisfy only incomparable positions") {
    const PopPattern p = parse_pattern("11'", Poset::antichain({"1", "1'"}));
    CHECK(word_occurrences(p, std::vector<int>{1, 1, 1}) == 2);
    CHECK(word_occurrences(parse_pattern("12"), std::vector<int>{1, 1, 2}) == 1);
  }

  TEST_CASE("non-overlapping greedy equals the dynamic program") {
    for (const char* t : {"12", "21", "132", "1324", "2413"}) {
      const Matcher m(parse_pattern(t));
      for (int n = 0; n <= 7; ++n)
        for (const auto& s : oracle::all_perms(n)) REQUIRE(m.max_nonoverlapping(s) == m.max_nonoverlapping_dp(s));
    }
    const Matcher m(parse_pattern("11'2", Poset::build({"1", "1'", "2"}, {{"1", "2"}, {"1'", "2"}})));
    for (const auto& s : oracle::all_perms(7)) REQUIRE(m.max_nonoverlapping(s) == m.max_nonoverlapping_dp(s));
  }

  TEST_CASE("quasi-avoidance means one occurrence at the end") {
    const PopPattern p = parse_pattern("21");
    for (int n = 1; n <= 6; ++n) {
      for (const auto& s : oracle::all_perms(n)) {
        const auto occ = occurrences(p, s);
        const bool expected = occ.size() == 1 && occ[0].back() == n - 1;
        CHECK(quasi_avoids(p, s) == expected);
      }
    }
  }

  TEST_CASE("join_free and relabel") {
    const PopPattern a = parse_pattern("12");
    const PopPattern b = relabel(parse_pattern("21"), "x");
    const PopPattern j = join_free(a, b);
    CHECK(j.length() == 4);
    CHECK(j.gaps()[1] == Gap::free);
    CHECK_THROWS_AS(join_free(a, a), Error);
  }
}

TEST_SUITE("kernels") {
  TEST_CASE("scalar and AVX2 kernels agree") {
    const simd::KernelSet* avx = simd::avx2_kernels();
    if (avx == nullptr) {
      MESSAGE("AVX2 unavailable; only the scalar set is exercised");
      return;
    }
    const simd::KernelSet& sc = simd::scalar_kernels();
    std::mt19937 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
      const int n = std::uniform_int_distribution<int>(0, simd::kMaxLength)(rng);
      std::vector<int> v(static_cast<std::size_t>(n));
      std::iota(v.begin(), v.end(), 1);
      std::shuffle(v.begin(), v.end(), rng);
      simd::PackedSeq seq;
      REQUIRE(seq.load(v));
      CHECK(sc.inversions(seq) == avx->inversions(seq));
      CHECK(sc.inversions(seq) == oracle::inv(v));
      CHECK(sc.descent_mask(seq) == avx->descent_mask(seq));
      const int m = std::uniform_int_distribution<int>(1, 5)(rng);
      std::vector<simd::OffsetPair> pairs;
      for (int r = 0; r < m; ++r) {
        auto lo = static_cast<std::uint8_t>(std::uniform_int_distribution<int>(0, m - 1)(rng));
        auto hi = static_cast<std::uint8_t>(std::uniform_int_distribution<int>(0, m - 1)(rng));
        if (lo != hi) pairs.push_back({lo, hi});
      }
      CHECK(sc.window_mask(seq, m, pairs.data(), static_cast<int>(pairs.size())) ==
            avx->window_mask(seq, m, pairs.data(), static_cast<int>(pairs.size())));
    }
  }

  TEST_CASE("window mask matches occurrence start positions") {
    const Matcher m(parse_pattern("2413"));
    for (const auto& s : oracle::all_perms(7)) {
      std::uint32_t expected = 0;
      for (const auto& o : m.occurrences(s)) expected |= 1u << o[0];
      REQUIRE(m.window_mask(s) == expected);
    }
  }

  TEST_CASE("load rejects long or wide input") {
    simd::PackedSeq seq;
    CHECK_FALSE(seq.load(std::vector<int>(33, 1)));
    CHECK_FALSE(seq.load(std::vector<int>{1, 200}));
  }
}
