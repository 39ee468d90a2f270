#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "poplab/bijections.hpp"
#include "poplab/error.hpp"
#include "poplab/flat.hpp"
#include "poplab/series.hpp"
#include "poplab/stats.hpp"

using namespace poplab;

TEST_SUITE("bijections") {
  TEST_CASE("cycle notation") {
    const CycleForm c = parse_cycles("(1 2)(3,4)");
    CHECK(c == CycleForm{{1, 2}, {3, 4}});
    CHECK(format_cycles(c) == "(1 2)(3 4)");
    CHECK_THROWS_AS(parse_cycles("(1 2"), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1 x)"), ParseError);
  }

  TEST_CASE("standard form: least element first, decreasing least elements") {
    const Permutation p = from_cycles(5, {{1, 3}, {2, 5, 4}});
    CHECK(standard_cycle_form(p) == CycleForm{{2, 5, 4}, {1, 3}});
    CHECK(cycles_to_avoider(p, 3) == Permutation::parse("25413"));
    CHECK_THROWS_AS(cycles_to_avoider(p, 2), Error);
  }

  TEST_CASE("examples") {
    CHECK(cycles_to_avoider(from_cycles(4, {{1, 2}, {3, 4}}), 2) == Permutation::parse("3412"));
    CHECK(cycles_to_avoider(Permutation::parse("1"), 1) == Permutation::parse("1"));
    CHECK(face_to_good_perm(HypercubeFace::parse("110x0y01")) == Permutation::parse("389457621"));
  }

  TEST_CASE("avoider images are avoiders") {
    for (int k = 1; k <= 3; ++k) {
      const PopPattern p = flat_dashed_pattern(k);
      for (int n = 0; n <= 6; ++n) {
        for (const auto& v : oracle::all_perms(n)) {
          const Permutation pi(v);
          bool fits = true;
          for (const auto& c : cycles(pi)) fits = fits && static_cast<int>(c.size()) <= k;
          if (!fits) continue;
          const Permutation s = cycles_to_avoider(pi, k);
          CHECK(oracle::count(p, s.values()) == 0);
          CHECK(avoider_to_cycles(s, k) == pi);
        }
      }
    }
  }

  TEST_CASE("faces") {
    CHECK_THROWS_AS(HypercubeFace::parse("1y0x"), ParseError);
    CHECK_THROWS_AS(HypercubeFace::parse("1x02"), ParseError);
    CHECK_THROWS_AS(HypercubeFace::parse("10"), ParseError);
    const HypercubeFace f = HypercubeFace::parse("110x0y01");
    CHECK(f.n() == 7);
    CHECK(f.to_string() == "110x0y01");
    for (int n = 1; n <= 6; ++n) {
      const auto faces = all_faces(n);
      CHECK(static_cast<long>(faces.size()) == n * (n + 1) / 2 * (1L << (n - 1)));
      std::set<Permutation> images;
      for (const auto& face : faces) {
        const Permutation p = face_to_good_perm(face);
        CHECK(p.size() == n + 2);
        CHECK(is_good_permutation(p));
        images.insert(p);
      }
      CHECK(images.size() == faces.size());
    }
  }

  TEST_CASE("good permutations by definition") {
    for (int n = 3; n <= 7; ++n) {
      long good = 0;
      for (const auto& v : oracle::all_perms(n)) {
        bool has213 = false;
        int seg312 = 0;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
              if (v[static_cast<std::size_t>(j)] < v[static_cast<std::size_t>(i)] && v[static_cast<std::size_t>(i)] < v[static_cast<std::size_t>(k)]) has213 = true;
        for (int i = 0; i + 2 < n; ++i) {
          const int a = v[static_cast<std::size_t>(i)], b = v[static_cast<std::size_t>(i + 1)], c = v[static_cast<std::size_t>(i + 2)];
          seg312 += b < c && c < a;
        }
        const bool expected = !has213 && seg312 == 1;
        CHECK(is_good_permutation(v) == expected);
        good += expected;
      }
      const int m = n - 2;
      CHECK(good == m * (m + 1) / 2 * (1L << (m - 1)));
    }
  }
}
