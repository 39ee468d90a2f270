#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace poplab {

enum class Comparison { less, greater, incomparable, equal };

const char* to_string(Comparison c);

/// Finite labeled strict partial order. The relation matrix is always stored
/// transitively closed; instances are immutable once built.
class Poset {
 public:
  using Relation = std::pair<std::string, std::string>;

  Poset() = default;

  /// Builds the transitive closure of `relations` (each pair a<b) over
  /// `elements`. Throws poplab::Error on duplicate labels, unknown labels or
  /// a cycle; the cycle diagnostic names an offending input pair.
  static Poset build(std::vector<std::string> elements,
                     const std::vector<Relation>& relations);

  /// Labels ordered as given: labels[0] < labels[1] < ...
  static Poset chain(std::vector<std::string> labels);
  static Poset antichain(std::vector<std::string> labels);

  /// a < a1, ..., a < ak and nothing else.
  static Poset flat(int k);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::string& label(std::size_t i) const { return elements_.at(i); }

  std::optional<std::size_t> index_of(const std::string& label) const;
  bool contains(const std::string& label) const { return index_of(label).has_value(); }

  bool less(std::size_t a, std::size_t b) const noexcept { return lt_[a * size() + b] != 0; }
  bool less(const std::string& a, const std::string& b) const;

  Comparison compare(const std::string& a, const std::string& b) const;

  /// Closed relation as a list of pairs (a<b), in index order.
  std::vector<Relation> relations() const;
  /// Cover relations only.
  std::vector<Relation> covers() const;

  /// Same elements, every relation reversed.
  Poset dual() const;

  /// Union with a poset on disjoint labels; no relations across the two parts.
  Poset disjoint_union(const Poset& other) const;

  /// Restriction to the listed labels.
  Poset induced(const std::vector<std::string>& labels) const;

  /// Some linear order of element indices compatible with the relation.
  std::vector<std::size_t> linear_extension() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.elements_ == b.elements_ && a.lt_ == b.lt_;
  }

 private:
  std::size_t require(const std::string& label) const;

  std::vector<std::string> elements_;
  std::vector<unsigned char> lt_;  // row-major size() x size()
};

}  // namespace poplab
