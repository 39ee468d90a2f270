#include <cstdlib>

#include "doctest.h"
#include "oracles.hpp"
#include "poplab/dsl.hpp"
#include "poplab/enumerate.hpp"
#include "poplab/error.hpp"
#include "poplab/series.hpp"

using namespace poplab;

TEST_SUITE("enumerate") {
  TEST_CASE("trivial counts") {
    for (int n = 0; n <= 7; ++n) {
      CHECK(count_avoiders({}, n) == factorial(n));
      CHECK(count_avoiders({parse_pattern("1")}, n) == (n == 0 ? 1 : 0));
      CHECK(count_avoiders({parse_pattern("12")}, n) == 1);
    }
  }

  TEST_CASE("brute force agrees with the oracle") {
    const PopPattern p = parse_pattern("1-32");
    for (int n = 0; n <= 6; ++n) {
      long expected = 0;
      for (const auto& s : oracle::all_perms(n)) expected += oracle::count(p, s) == 0;
      CHECK(count_avoiders({p}, n) == expected);
    }
  }

  TEST_CASE("results do not depend on the number of jobs") {
    const PopPattern p = parse_pattern("2-13");
    SweepOptions one, four;
    four.jobs = 4;
    for (int n = 0; n <= 7; ++n) {
      CHECK(distribution(p, n, {}, one) == distribution(p, n, {}, four));
      CHECK(nonoverlap_distribution(parse_pattern("132"), n, one) == nonoverlap_distribution(parse_pattern("132"), n, four));
      CHECK(joint_distribution("inv", named_statistic("inv"), "maj", named_statistic("maj"), n, {}, one) ==
            joint_distribution("inv", named_statistic("inv"), "maj", named_statistic("maj"), n, {}, four));
    }
    CHECK(avoider_set({p}, 6, one) == avoider_set({p}, 6, four));
  }

  TEST_CASE("distribution rows sum to n!") {
    for (int n = 0; n <= 7; ++n) CHECK(distribution(parse_pattern("1-2"), n).total() == factorial(n));
  }

  TEST_CASE("restricted distributions only count admitted permutations") {
    const auto t = distribution(parse_pattern("21"), 5, {parse_pattern("2-1-3")});
    CHECK(t.total() == 42);
  }

  TEST_CASE("words") {
    const PopPattern p = parse_pattern("12");
    CHECK(count_word_avoiders(p, 3, 2) == 4);  // 111 211 221 222
    CHECK(word_nonoverlap_distribution(p, 2, 2).row() == std::vector<Integer>{3, 1});
  }

  TEST_CASE("enumeration guard") {
    SweepOptions small;
    small.max_n = 5;
    CHECK_THROWS_AS(count_avoiders({}, 6, small), LimitError);
    CHECK_NOTHROW(count_avoiders({}, 5, small));
    CHECK_THROWS_AS(named_statistic("nope"), Error);
  }

  TEST_CASE("circular maxima interpretations") {
    const auto linear = circular_maxima_distribution(4, false);
    CHECK(linear.at({1}) == 16);
    CHECK(linear.at({2}) == 8);
    const auto rot = circular_maxima_distribution(4, true);
    CHECK(rot.total() == 6);
  }

  TEST_CASE("tables serialise") {
    const auto t = distribution(parse_pattern("21"), 3);
    CHECK(t.to_csv() == "n,occurrences,count\n3,0,1\n3,1,4\n3,2,1\n");
    CHECK(t.to_json()["n"] == 3);
    CHECK(to_bfile({Integer(1), Integer(2)}, 1) == "1 1\n2 2\n");
  }
}
