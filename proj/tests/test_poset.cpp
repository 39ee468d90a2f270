#include <set>

#include "doctest.h"
#include "poplab/error.hpp"
#include "poplab/poset.hpp"

using namespace poplab;

TEST_SUITE("poset") {
  TEST_CASE("relations are transitively closed") {
    const Poset p = Poset::build({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}});
    CHECK(p.less("a", "c"));
    CHECK(p.compare("c", "a") == Comparison::greater);
    CHECK(p.compare("a", "d") == Comparison::incomparable);
    CHECK(p.compare("b", "b") == Comparison::equal);
    CHECK(p.relations().size() == 3);
    CHECK(p.covers().size() == 2);
  }

  TEST_CASE("construction errors") {
    CHECK_THROWS_AS(Poset::build({"a", "a"}, {}), Error);
    CHECK_THROWS_AS(Poset::build({"a"}, {{"a", "z"}}), Error);
    CHECK_THROWS_AS(Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}), Error);
    CHECK_THROWS_AS(Poset::build({"a"}, {{"a", "a"}}), Error);
  }

  TEST_CASE("chain, antichain and flat") {
    const Poset c = Poset::chain({"1", "2", "3"});
    CHECK(c.relations().size() == 3);
    CHECK(Poset::antichain({"x", "y"}).relations().empty());
    const Poset f = Poset::flat(3);
    CHECK(f.size() == 4);
    for (const char* t : {"a1", "a2", "a3"}) CHECK(f.less("a", t));
    CHECK(f.compare("a1", "a2") == Comparison::incomparable);
  }

  TEST_CASE("covers regenerate the closure") {
    const Poset p = Poset::build({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"d", "e"}, {"a", "e"}});
    const Poset q = Poset::build(p.elements(), p.covers());
    CHECK(p == q);
    CHECK(p.covers().size() == 5);
  }

  TEST_CASE("dual is an involution that reverses every relation") {
    const Poset p = Poset::build({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
    CHECK(p.dual().dual() == p);
    for (const auto& [a, b] : p.relations()) CHECK(p.dual().less(b, a));
  }

  TEST_CASE("linear extension respects the order") {
    const Poset p = Poset::build({"e", "d", "c", "b", "a"}, {{"a", "b"}, {"b", "c"}, {"a", "d"}, {"d", "e"}});
    const auto ext = p.linear_extension();
    std::vector<std::size_t> pos(ext.size());
    for (std::size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = i;
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b)
        if (p.less(a, b)) CHECK(pos[a] < pos[b]);
  }

  TEST_CASE("disjoint union and induced subposet") {
    const Poset a = Poset::chain({"1", "2"});
    const Poset b = Poset::chain({"x", "y"});
    const Poset u = a.disjoint_union(b);
    CHECK(u.size() == 4);
    CHECK(u.compare("1", "x") == Comparison::incomparable);
    CHECK(u.less("x", "y"));
    CHECK_THROWS_AS(a.disjoint_union(a), Error);
    CHECK(u.induced({"1", "2"}) == a);
  }
}
