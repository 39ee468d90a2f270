#include <filesystem>

#include "doctest.h"
#include "poplab/data.hpp"
#include "poplab/dsl.hpp"
#include "poplab/error.hpp"
#include "poplab/flat.hpp"

using namespace poplab;

TEST_SUITE("data") {
  TEST_CASE("every bundled poset loads and round-trips through JSON") {
    int seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(data_dir() / "posets")) {
      const Poset p = load_poset(entry.path());
      CHECK(poset_from_json(poset_to_json(p)) == p);
      ++seen;
    }
    CHECK(seen >= 20);
  }

  TEST_CASE("bundled patterns load and match their builders") {
    for (int k = 1; k <= 4; ++k) {
      CHECK(load_pattern(data_dir() / "patterns" / ("flat_" + std::to_string(k) + "_segmented.json")) == flat_segmented_pattern(k));
      CHECK(load_pattern(data_dir() / "patterns" / ("flat_" + std::to_string(k) + "_dashed.json")) == flat_dashed_pattern(k));
    }
    CHECK(load_pattern(data_dir() / "patterns" / "flat_3_a1aa2a3.json") == flat_split_pattern(1, 2));
  }

  TEST_CASE("pattern JSON round trip") {
    const PopPattern p = parse_pattern("[1'~12-3]", bundled_poset("fig10"));
    CHECK(pattern_from_json(pattern_to_json(p)) == p);
  }

  TEST_CASE("flat poset figure agrees with the builder") {
    CHECK(bundled_poset("flat_3") == Poset::flat(3));
  }

  TEST_CASE("JSON errors") {
    CHECK_THROWS_AS(poset_from_json(nlohmann::json::parse(R"({"elements": ["a"], "relations": [["a", "b"]]})")), Error);
    CHECK_THROWS_AS(pattern_from_json(nlohmann::json::parse(R"({"poset": "no_such_poset", "letters": ["a"]})")), Error);
    CHECK_THROWS_AS(bundled_poset("no_such_poset"), Error);
  }

  TEST_CASE("golden tables") {
    const CsvTable t = golden("table1");
    CHECK(t.rows.size() == 14);
    CHECK_THROWS_AS(t.column("missing"), Error);
    CHECK(parse_integers("1 2  47376") == std::vector<long long>{1, 2, 47376});
    CHECK(golden("openproblems").rows.size() == 8);
  }
}
