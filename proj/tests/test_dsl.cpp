#include <random>

#include "doctest.h"
#include "poplab/dsl.hpp"
#include "poplab/error.hpp"

using namespace poplab;

TEST_SUITE("dsl") {
  TEST_CASE("classical patterns read digits as values") {
    const PopPattern p = parse_pattern("2-13");
    CHECK(p.letters() == std::vector<std::string>{"2", "1", "3"});
    CHECK(p.gaps() == std::vector<Gap>{Gap::free, Gap::adjacent});
    CHECK(p.position_less(1, 0));
    CHECK(p.position_less(0, 2));
  }

  TEST_CASE("primes, boxes and anchors") {
    const Poset fig = Poset::build({"1", "1'", "2"}, {{"1", "2"}, {"1'", "2"}});
    const PopPattern p = parse_pattern("[1' ~ 1 2]", fig);
    CHECK(p.letters() == std::vector<std::string>{"1'", "1", "2"});
    CHECK(p.gaps() == std::vector<Gap>{Gap::strict, Gap::adjacent});
    CHECK(p.anchored_left());
    CHECK(p.anchored_right());
    CHECK(print_pattern(p) == "[1'~12]");
  }

  TEST_CASE("errors carry the position") {
    auto position = [](std::string_view text) -> std::size_t {
      try {
        parse_pattern(text);
      } catch (const ParseError& e) {
        return e.position();
      }
      return 999;
    };
    CHECK(position("1(2") == 1);
    CHECK(position("12-") == 3);
    CHECK(position("-12") == 0);
    CHECK(position("1--2") == 2);
    CHECK(position("") == 0);
    CHECK_THROWS_AS(parse_pattern("1'2"), Error);  // primes need an explicit poset
    CHECK_THROWS_AS(parse_pattern("13", Poset::chain({"1", "2"})), Error);
    CHECK_THROWS_AS(parse_pattern("11"), Error);
  }

  TEST_CASE("print then parse is the identity on random patterns") {
    std::mt19937 rng(2024);
    const std::vector<std::string> pool{"1", "2", "3", "1'", "2'", "1''", "a", "b", "x'"};
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<std::string> labels = pool;
      std::shuffle(labels.begin(), labels.end(), rng);
      const int m = std::uniform_int_distribution<int>(1, 5)(rng);
      labels.resize(static_cast<std::size_t>(m));
      std::vector<Poset::Relation> rel;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          if (rng() % 3 == 0) rel.emplace_back(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]);
      std::vector<std::string> letters = labels;
      std::shuffle(letters.begin(), letters.end(), rng);
      std::vector<Gap> gaps;
      for (int i = 0; i + 1 < m; ++i) gaps.push_back(static_cast<Gap>(rng() % 3));
      const PopPattern p(Poset::build(labels, rel), letters, gaps, rng() % 2 == 0, rng() % 2 == 0);
      const std::string text = print_pattern(p);
      REQUIRE(parse_pattern(text, p.poset()) == p);
    }
  }

  TEST_CASE("notation letters") {
    CHECK(is_notation_letter("1''"));
    CHECK(is_notation_letter("a"));
    CHECK_FALSE(is_notation_letter("a1"));
    CHECK_FALSE(is_notation_letter("'"));
  }
}
