#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "poplab/dsl.hpp"
#include "poplab/error.hpp"
#include "poplab/permutation.hpp"
#include "poplab/stats.hpp"

using namespace poplab;

namespace {

std::vector<std::vector<int>> stream_all(int n, std::optional<int> first = std::nullopt) {
  std::vector<std::vector<int>> out;
  PermutationStream s(n, first);
  while (s.next()) out.emplace_back(s.current().begin(), s.current().end());
  return out;
}

}  // namespace

TEST_SUITE("perms") {
  TEST_CASE("stream visits S_n in lexicographic order") {
    for (int n = 0; n <= 7; ++n) CHECK(stream_all(n) == oracle::all_perms(n));
  }

  TEST_CASE("shards by first letter partition S_n") {
    for (int n = 1; n <= 6; ++n) {
      std::vector<std::vector<int>> joined;
      for (int f = 1; f <= n; ++f) {
        for (auto& p : stream_all(n, f)) {
          CHECK(p[0] == f);
          joined.push_back(std::move(p));
        }
      }
      CHECK(joined == oracle::all_perms(n));
    }
  }

  TEST_CASE("word streams") {
    for (int k = 1; k <= 3; ++k) {
      for (int n = 0; n <= 5; ++n) {
        std::set<std::vector<int>> seen;
        WordStream w(n, k);
        while (w.next()) seen.emplace(w.current().begin(), w.current().end());
        long expected = 1;
        for (int i = 0; i < n; ++i) expected *= k;
        CHECK(static_cast<long>(seen.size()) == expected);
      }
    }
  }

  TEST_CASE("parsing") {
    CHECK(Permutation::parse("3412").values().size() == 4);
    CHECK(Permutation::parse("10 1 2 3 4 5 6 7 8 9")[0] == 10);
    CHECK_THROWS_AS(Permutation::parse("1 1"), Error);
    CHECK_THROWS_AS(Permutation::parse("24"), Error);
    CHECK(Permutation::parse("3412").to_string() == "3412");
  }

  TEST_CASE("inv, maj and des against definitions; Mahonian symmetry") {
    for (int n = 0; n <= 7; ++n) {
      std::map<int, int> by_inv, by_maj;
      for (const auto& p : oracle::all_perms(n)) {
        int d = 0, m = 0;
        for (int i = 0; i + 1 < n; ++i)
          if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(i + 1)]) ++d, m += i + 1;
        CHECK(des(p) == d);
        CHECK(maj(p) == m);
        CHECK(inv(p) == oracle::inv(p));
        ++by_inv[inv(p)];
        ++by_maj[maj(p)];
      }
      CHECK(by_inv == by_maj);
    }
  }

  TEST_CASE("inverse, reverse, complement") {
    for (const auto& v : oracle::all_perms(6)) {
      const Permutation p(v);
      CHECK(inverse(inverse(p)) == p);
      CHECK(reverse(reverse(p)) == p);
      CHECK(complement(complement(p)) == p);
      CHECK(inv(inverse(p)) == inv(p));
      CHECK(peaks(p) == valleys(complement(p)));
      CHECK(inv(reverse(p)) == 15 - inv(p));
    }
  }

  TEST_CASE("peaks, valleys, extrema classes") {
    const std::vector<int> p{2, 5, 1, 4, 3, 6};
    CHECK(peaks(p) == 2);
    CHECK(valleys(p) == 2);
    CHECK(left_to_right_minima(p) == std::vector<int>{0, 2});
    for (int n = 1; n <= 7; ++n) {
      for (const auto& s : oracle::all_perms(n)) {
        CHECK(modified_maxima(s) == modified_minima(s) + 1);
        CHECK(modified_maxima(s) + modified_minima(s) + double_rises(s) + double_falls(s) == n);
      }
    }
  }

  TEST_CASE("circular maxima") {
    CHECK(circular_maxima(std::vector<int>{1}) == 0);
    CHECK(circular_maxima(std::vector<int>{1, 2}) == 1);
    CHECK(circular_maxima(std::vector<int>{1, 3, 2, 4}) == 2);
  }

  TEST_CASE("alternating") {
    CHECK(is_alternating(std::vector<int>{2, 1, 3}));
    CHECK_FALSE(is_alternating(std::vector<int>{1, 3, 2}));
    CHECK(is_reverse_alternating(std::vector<int>{1, 3, 2}));
    int count = 0;
    for (const auto& s : oracle::all_perms(5)) count += is_alternating(s);
    CHECK(count == 16);
  }

  TEST_CASE("cycles round trip and cover S_n") {
    for (int n = 0; n <= 6; ++n) {
      for (const auto& v : oracle::all_perms(n)) {
        const Permutation p(v);
        const auto c = cycles(p);
        int total = 0;
        for (const auto& cyc : c) {
          total += static_cast<int>(cyc.size());
          CHECK(*std::min_element(cyc.begin(), cyc.end()) == cyc.front());
        }
        CHECK(total == n);
        CHECK(from_cycles(n, c) == p);
      }
    }
  }

  TEST_CASE("place and major index of a segmented pattern") {
    const PopPattern s = parse_pattern("21");
    const std::vector<int> p{3, 1, 4, 2, 5};
    CHECK(place_sigma(s, p) == std::vector<int>{1, 3});
    CHECK(maj_sigma(s, p) == maj(p));
    for (const auto& q : oracle::all_perms(6)) CHECK(maj_sigma(s, q) == maj(q));
  }
}
