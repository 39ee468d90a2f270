#pragma once

// JSON forms of posets and patterns, and the bundled data directory.
//
//   poset:   {"elements": [...], "relations": [[a, b], ...]}   a < b
//   pattern: {"poset": <poset object or file name>, "letters": [...],
//             "gaps": ["ADJ"|"FREE"|"STRICT", ...],
//             "anchored_left": bool, "anchored_right": bool}

#include <filesystem>
#include <string>
#include <vector>

#include "poplab/pattern.hpp"
#include "poplab/poset.hpp"
#include "poplab/vendor_json.hpp"

namespace poplab {

/// POPLAB_DATA_DIR from the environment, else the source tree's data/.
std::filesystem::path data_dir();

Poset poset_from_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const Poset& p);
Poset load_poset(const std::filesystem::path& file);
/// data/posets/<name>.json
Poset bundled_poset(const std::string& name);

/// A string "poset" member is a file path, resolved against `base` first and
/// then against data/posets.
PopPattern pattern_from_json(const nlohmann::json& j, const std::filesystem::path& base = {});
nlohmann::json pattern_to_json(const PopPattern& p);
PopPattern load_pattern(const std::filesystem::path& file);

/// Reads a comma-separated file with a header row; no quoting.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::size_t column(const std::string& name) const;
};
CsvTable load_csv(const std::filesystem::path& file);
/// data/golden/<name>.csv
CsvTable golden(const std::string& name);

/// Parses whitespace-separated integers.
std::vector<long long> parse_integers(const std::string& text);

}  // namespace poplab
