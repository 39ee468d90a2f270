#include "poplab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "poplab/error.hpp"

namespace poplab {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw Error("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  const bool separated = std::any_of(text.begin(), text.end(), [](char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c));
  });
  std::vector<int> values;
  if (separated) {
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
      if (!std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw Error("permutation: bad entry '" + tok + "'");
      }
      values.push_back(std::stoi(tok));
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(std::string("permutation: bad character '") + c + "'");
      }
      values.push_back(c - '0');
    }
  }
  return Permutation(std::move(values));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (int i = 0; i < size(); ++i) {
    if (!compact && i > 0) out.push_back(' ');
    out += std::to_string(values_[static_cast<std::size_t>(i)]);
  }
  return out;
}

PermutationStream::PermutationStream(int n, std::optional<int> first)
    : values_(static_cast<std::size_t>(std::max(n, 0))), offset_(0) {
  std::iota(values_.begin(), values_.end(), 1);
  if (first) {
    if (*first < 1 || *first > n) {
      done_ = true;
      return;
    }
    std::rotate(values_.begin(), values_.begin() + (*first - 1), values_.begin() + *first);
    offset_ = 1;
  }
}

bool PermutationStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  if (!std::next_permutation(values_.begin() + offset_, values_.end())) {
    done_ = true;
    return false;
  }
  return true;
}

WordStream::WordStream(int n, int k, std::optional<int> first)
    : values_(static_cast<std::size_t>(std::max(n, 0)), 1), k_(k), offset_(0) {
  if (k < 1 && n > 0) done_ = true;
  if (first) {
    if (n == 0 || *first < 1 || *first > k) {
      done_ = true;
      return;
    }
    values_[0] = *first;
    offset_ = 1;
  }
}

bool WordStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  for (int i = static_cast<int>(values_.size()) - 1; i >= offset_; --i) {
    auto& v = values_[static_cast<std::size_t>(i)];
    if (v < k_) {
      ++v;
      return true;
    }
    v = 1;
  }
  done_ = true;
  return false;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  PermutationStream s(n);
  while (s.next()) out.emplace_back(std::vector<int>(s.current().begin(), s.current().end()));
  return out;
}

std::vector<Word> all_words(int n, int k) {
  std::vector<Word> out;
  WordStream s(n, k);
  while (s.next()) out.emplace_back(s.current().begin(), s.current().end());
  return out;
}

}  // namespace poplab
