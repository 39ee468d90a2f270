#include "poplab/poset.hpp"

#include <algorithm>
#include <unordered_set>

#include "poplab/error.hpp"

namespace poplab {

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::less: return "less";
    case Comparison::greater: return "greater";
    case Comparison::incomparable: return "incomparable";
    case Comparison::equal: return "equal";
  }
  return "?";
}

Poset Poset::build(std::vector<std::string> elements, const std::vector<Relation>& relations) {
  Poset p;
  {
    std::unordered_set<std::string> seen;
    for (const auto& e : elements) {
      if (!seen.insert(e).second) throw Error("poset: duplicate label '" + e + "'");
    }
  }
  p.elements_ = std::move(elements);
  const std::size_t n = p.size();
  p.lt_.assign(n * n, 0);

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(relations.size());
  for (const auto& [a, b] : relations) {
    auto ia = p.index_of(a);
    auto ib = p.index_of(b);
    if (!ia) throw Error("poset: unknown label '" + a + "' in relation (" + a + "," + b + ")");
    if (!ib) throw Error("poset: unknown label '" + b + "' in relation (" + a + "," + b + ")");
    if (*ia == *ib) throw Error("poset: cycle detected at relation (" + a + "," + b + ")");
    edges.emplace_back(*ia, *ib);
    p.lt_[*ia * n + *ib] = 1;
  }

  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.lt_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.lt_[k * n + j]) p.lt_[i * n + j] = 1;

  for (std::size_t r = 0; r < edges.size(); ++r) {
    auto [a, b] = edges[r];
    if (p.lt_[b * n + a]) {
      throw Error("poset: cycle detected through relation (" + relations[r].first + "," +
                  relations[r].second + ")");
    }
  }
  return p;
}

Poset Poset::chain(std::vector<std::string> labels) {
  std::vector<Relation> rel;
  for (std::size_t i = 1; i < labels.size(); ++i) rel.emplace_back(labels[i - 1], labels[i]);
  return build(std::move(labels), rel);
}

Poset Poset::antichain(std::vector<std::string> labels) { return build(std::move(labels), {}); }

Poset Poset::flat(int k) {
  if (k < 1) throw Error("flat poset needs k >= 1");
  std::vector<std::string> labels{"a"};
  std::vector<Relation> rel;
  for (int i = 1; i <= k; ++i) {
    labels.push_back("a" + std::to_string(i));
    rel.emplace_back("a", labels.back());
  }
  return build(std::move(labels), rel);
}

std::optional<std::size_t> Poset::index_of(const std::string& label) const {
  auto it = std::find(elements_.begin(), elements_.end(), label);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t Poset::require(const std::string& label) const {
  auto i = index_of(label);
  if (!i) throw Error("poset: unknown label '" + label + "'");
  return *i;
}

bool Poset::less(const std::string& a, const std::string& b) const {
  return less(require(a), require(b));
}

Comparison Poset::compare(const std::string& a, const std::string& b) const {
  const auto ia = require(a);
  const auto ib = require(b);
  if (ia == ib) return Comparison::equal;
  if (less(ia, ib)) return Comparison::less;
  if (less(ib, ia)) return Comparison::greater;
  return Comparison::incomparable;
}

std::vector<Poset::Relation> Poset::relations() const {
  std::vector<Relation> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (less(i, j)) out.emplace_back(elements_[i], elements_[j]);
  return out;
}

std::vector<Poset::Relation> Poset::covers() const {
  std::vector<Relation> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (!less(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < size() && cover; ++k) cover = !(less(i, k) && less(k, j));
      if (cover) out.emplace_back(elements_[i], elements_[j]);
    }
  }
  return out;
}

Poset Poset::dual() const {
  Poset d = *this;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.lt_[i * n + j] = lt_[j * n + i];
  return d;
}

Poset Poset::disjoint_union(const Poset& other) const {
  std::vector<std::string> labels = elements_;
  labels.insert(labels.end(), other.elements_.begin(), other.elements_.end());
  auto rel = relations();
  auto orel = other.relations();
  rel.insert(rel.end(), orel.begin(), orel.end());
  return build(std::move(labels), rel);
}

Poset Poset::induced(const std::vector<std::string>& labels) const {
  std::vector<Relation> rel;
  for (const auto& a : labels)
    for (const auto& b : labels)
      if (less(a, b)) rel.emplace_back(a, b);
  return build(labels, rel);
}

std::vector<std::size_t> Poset::linear_extension() const {
  const std::size_t n = size();
  std::vector<std::size_t> indegree(n, 0), order;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (less(i, j)) ++indegree[j];
  std::vector<char> done(n, 0);
  while (order.size() < n) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && indegree[i] == 0) { pick = i; break; }
    if (pick == n) throw Error("poset: relation is not acyclic");
    done[pick] = 1;
    order.push_back(pick);
    for (std::size_t j = 0; j < n; ++j)
      if (less(pick, j)) --indegree[j];
  }
  return order;
}

}  // namespace poplab
