#pragma once

#include <map>
#include <string>
#include <vector>

#include "poplab/ring.hpp"
#include "vendor_json.hpp"

namespace poplab {

/// Exact counts of objects of size n, keyed by a tuple of statistic values.
class DistributionTable {
 public:
  DistributionTable() = default;
  DistributionTable(int n, std::vector<std::string> axes) : n_(n), axes_(std::move(axes)) {}

  int n() const noexcept { return n_; }
  const std::vector<std::string>& axes() const noexcept { return axes_; }
  const std::map<std::vector<int>, Integer>& cells() const noexcept { return cells_; }

  void add(const std::vector<int>& key, const Integer& count);
  Integer at(const std::vector<int>& key) const;
  Integer total() const;

  /// Counts by the value of one axis, summing the others.
  std::map<int, Integer> marginal(std::size_t axis) const;
  /// Dense row for a one-axis table: entry v is the count at value v.
  std::vector<Integer> row() const;

  std::string to_csv() const;
  nlohmann::json to_json() const;

  friend bool operator==(const DistributionTable& a, const DistributionTable& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

 private:
  int n_ = 0;
  std::vector<std::string> axes_;
  std::map<std::vector<int>, Integer> cells_;
};

/// OEIS b-file lines "n a(n)" for n = first, first+1, ...
std::string to_bfile(const std::vector<Integer>& values, int first);

}  // namespace poplab
