#include "poplab/table.hpp"

#include <sstream>

namespace poplab {

void DistributionTable::add(const std::vector<int>& key, const Integer& count) {
  if (key.size() != axes_.size()) throw Error("distribution table: key arity mismatch");
  if (count == 0) return;
  cells_[key] += count;
}

Integer DistributionTable::at(const std::vector<int>& key) const {
  auto it = cells_.find(key);
  return it == cells_.end() ? Integer(0) : it->second;
}

Integer DistributionTable::total() const {
  Integer sum = 0;
  for (const auto& [key, count] : cells_) sum += count;
  return sum;
}

std::map<int, Integer> DistributionTable::marginal(std::size_t axis) const {
  std::map<int, Integer> out;
  for (const auto& [key, count] : cells_) out[key.at(axis)] += count;
  return out;
}

std::vector<Integer> DistributionTable::row() const {
  if (axes_.size() != 1) throw Error("distribution table: row() needs a single axis");
  std::vector<Integer> out;
  for (const auto& [key, count] : cells_) {
    if (key[0] < 0) throw Error("distribution table: negative statistic value");
    if (out.size() <= static_cast<std::size_t>(key[0])) out.resize(static_cast<std::size_t>(key[0]) + 1, 0);
    out[static_cast<std::size_t>(key[0])] = count;
  }
  return out;
}

std::string DistributionTable::to_csv() const {
  std::ostringstream out;
  out << "n";
  for (const auto& a : axes_) out << ',' << a;
  out << ",count\n";
  for (const auto& [key, count] : cells_) {
    out << n_;
    for (int v : key) out << ',' << v;
    out << ',' << count.get_str() << '\n';
  }
  return out.str();
}

nlohmann::json DistributionTable::to_json() const {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& [key, count] : cells_) {
    cells.push_back({{"key", key}, {"count", count.get_str()}});
  }
  return {{"n", n_}, {"axes", axes_}, {"cells", cells}};
}

std::string to_bfile(const std::vector<Integer>& values, int first) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << first + static_cast<int>(i) << ' ' << values[i].get_str() << '\n';
  }
  return out.str();
}

}  // namespace poplab
