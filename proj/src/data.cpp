#include "poplab/data.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "poplab/error.hpp"

namespace poplab {

namespace fs = std::filesystem;

fs::path data_dir() {
  if (const char* env = std::getenv("POPLAB_DATA_DIR"); env && *env) return env;
#ifdef POPLAB_DATA_DIR
  return POPLAB_DATA_DIR;
#else
  return "data";
#endif
}

namespace {

nlohmann::json read_json(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open " + file.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(file.string() + ": " + e.what());
  }
}

}  // namespace

Poset poset_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> elements = j.at("elements").get<std::vector<std::string>>();
    std::vector<Poset::Relation> relations;
    if (j.contains("relations")) {
      for (const auto& r : j.at("relations")) {
        if (!r.is_array() || r.size() != 2) throw Error("poset: each relation is a pair [a, b]");
        relations.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
      }
    }
    return Poset::build(std::move(elements), relations);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("poset: ") + e.what());
  }
}

nlohmann::json poset_to_json(const Poset& p) {
  nlohmann::json rel = nlohmann::json::array();
  for (const auto& [a, b] : p.covers()) rel.push_back({a, b});
  return {{"elements", p.elements()}, {"relations", rel}};
}

Poset load_poset(const fs::path& file) {
  try {
    return poset_from_json(read_json(file));
  } catch (const Error& e) {
    throw Error(file.string() + ": " + e.what());
  }
}

Poset bundled_poset(const std::string& name) { return load_poset(data_dir() / "posets" / (name + ".json")); }

PopPattern pattern_from_json(const nlohmann::json& j, const fs::path& base) {
  try {
    const auto& pj = j.at("poset");
    Poset poset;
    if (pj.is_string()) {
      fs::path ref = pj.get<std::string>();
      if (!base.empty() && fs::exists(base / ref)) {
        poset = load_poset(base / ref);
      } else if (fs::exists(ref)) {
        poset = load_poset(ref);
      } else {
        fs::path bundled = data_dir() / "posets" / ref;
        if (bundled.extension().empty()) bundled += ".json";
        poset = load_poset(bundled);
      }
    } else {
      poset = poset_from_json(pj);
    }
    auto letters = j.at("letters").get<std::vector<std::string>>();
    std::vector<Gap> gaps;
    if (j.contains("gaps")) {
      for (const auto& g : j.at("gaps")) gaps.push_back(gap_from_string(g.get<std::string>()));
    } else if (!letters.empty()) {
      gaps.assign(letters.size() - 1, Gap::adjacent);
    }
    const bool left = j.value("anchored_left", false);
    const bool right = j.value("anchored_right", false);
    return PopPattern(std::move(poset), std::move(letters), std::move(gaps), left, right);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("pattern: ") + e.what());
  }
}

nlohmann::json pattern_to_json(const PopPattern& p) {
  nlohmann::json gaps = nlohmann::json::array();
  for (Gap g : p.gaps()) gaps.push_back(to_string(g));
  return {{"poset", poset_to_json(p.poset())},
          {"letters", p.letters()},
          {"gaps", gaps},
          {"anchored_left", p.anchored_left()},
          {"anchored_right", p.anchored_right()}};
}

PopPattern load_pattern(const fs::path& file) {
  return pattern_from_json(read_json(file), file.parent_path());
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw Error("csv: no column '" + name + "'");
}

CsvTable load_csv(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open " + file.string());
  auto split = [](const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
  };
  CsvTable t;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (t.header.empty()) {
      t.header = split(line);
      continue;
    }
    auto row = split(line);
    if (row.size() != t.header.size()) {
      throw Error(file.string() + ": row has " + std::to_string(row.size()) + " cells, header has " +
                  std::to_string(t.header.size()));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

CsvTable golden(const std::string& name) { return load_csv(data_dir() / "golden" / (name + ".csv")); }

std::vector<long long> parse_integers(const std::string& text) {
  std::vector<long long> out;
  std::istringstream in(text);
  long long v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw Error("expected integers in '" + text + "'");
  return out;
}

}  // namespace poplab
