#include "poplab/bijections.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "poplab/dsl.hpp"
#include "poplab/error.hpp"
#include "poplab/series.hpp"
#include "poplab/stats.hpp"

namespace poplab {

CycleForm standard_cycle_form(const Permutation& p) {
  CycleForm c = cycles(p);
  std::reverse(c.begin(), c.end());
  return c;
}

CycleForm parse_cycles(std::string_view text) {
  CycleForm out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<int> cycle;
    for (;;) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i >= text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected a number", i);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000000) throw ParseError("number too large", i);
        ++i;
      }
      cycle.push_back(v);
    }
    if (cycle.empty()) throw ParseError("empty cycle", i - 1);
    out.push_back(std::move(cycle));
    skip();
  }
  if (out.empty()) throw ParseError("no cycles", 0);
  return out;
}

std::string format_cycles(const CycleForm& c) {
  std::ostringstream out;
  for (const auto& cycle : c) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i];
    out << ')';
  }
  return out.str();
}

Permutation cycles_to_avoider(const Permutation& p, int k) {
  if (k < 1) throw Error("cycles_to_avoider: k must be positive");
  std::vector<int> out;
  for (const auto& cycle : standard_cycle_form(p)) {
    if (static_cast<int>(cycle.size()) > k) {
      throw Error("cycles_to_avoider: cycle " + format_cycles({cycle}) + " is longer than " +
                  std::to_string(k));
    }
    out.insert(out.end(), cycle.begin(), cycle.end());
  }
  return Permutation(std::move(out));
}

Permutation avoider_to_cycles(const Permutation& s, int k) {
  if (k < 1) throw Error("avoider_to_cycles: k must be positive");
  if (!avoids(flat_dashed_pattern(k), s)) {
    throw Error("avoider_to_cycles: " + s.to_string() + " contains a-a1..a" + std::to_string(k));
  }
  const auto minima = left_to_right_minima(s);
  CycleForm c;
  for (std::size_t i = 0; i < minima.size(); ++i) {
    const int from = minima[i];
    const int to = i + 1 < minima.size() ? minima[i + 1] : s.size();
    std::vector<int> cycle;
    for (int j = from; j < to; ++j) cycle.push_back(s[j]);
    c.push_back(std::move(cycle));
  }
  return from_cycles(s.size(), c);
}

HypercubeFace::HypercubeFace(std::vector<int> bits, int x, int y) : bits_(std::move(bits)), x_(x), y_(y) {
  const int len = static_cast<int>(bits_.size());
  if (len < 2) throw Error("face: vector length must be at least 2");
  if (!(0 <= x_ && x_ < y_ && y_ < len)) throw Error("face: marks must satisfy 0 <= x < y < length");
  for (int k = 0; k < len; ++k) {
    if (k == x_ || k == y_) {
      bits_[static_cast<std::size_t>(k)] = 0;
      continue;
    }
    const int b = bits_[static_cast<std::size_t>(k)];
    if (b != 0 && b != 1) throw Error("face: entries must be 0 or 1");
  }
}

HypercubeFace HypercubeFace::parse(std::string_view text) {
  std::vector<int> bits;
  int x = -1;
  int y = -1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '0' || c == '1') {
      bits.push_back(c - '0');
    } else if (c == 'x') {
      if (x >= 0) throw ParseError("second 'x' in face", i);
      if (y >= 0) throw ParseError("'x' must precede 'y'", i);
      x = static_cast<int>(bits.size());
      bits.push_back(0);
    } else if (c == 'y') {
      if (y >= 0) throw ParseError("second 'y' in face", i);
      if (x < 0) throw ParseError("'x' must precede 'y'", i);
      y = static_cast<int>(bits.size());
      bits.push_back(0);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in face", i);
    }
  }
  if (x < 0 || y < 0) throw ParseError("face needs one 'x' and one 'y'", text.size());
  return HypercubeFace(std::move(bits), x, y);
}

std::string HypercubeFace::to_string() const {
  std::string s;
  for (int k = 0; k <= n(); ++k) {
    s += k == x_ ? 'x' : k == y_ ? 'y' : static_cast<char>('0' + bit(k));
  }
  return s;
}

std::vector<HypercubeFace> all_faces(int n) {
  if (n < 1) throw Error("all_faces: n must be at least 1");
  std::vector<HypercubeFace> out;
  const int len = n + 1;
  for (int x = 0; x < len; ++x) {
    for (int y = x + 1; y < len; ++y) {
      for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> bits(static_cast<std::size_t>(len), 0);
        int b = 0;
        for (int k = 0; k < len; ++k) {
          if (k == x || k == y) continue;
          bits[static_cast<std::size_t>(k)] = static_cast<int>((mask >> (n - 2 - b)) & 1u);
          ++b;
        }
        out.emplace_back(std::move(bits), x, y);
      }
    }
  }
  return out;
}

namespace {

// Fills `slots` with values from `next` upward, reading bits[from..to):
// 0 takes the leftmost free slot, 1 the rightmost; the last value takes the
// single slot left over.
void fill_block(std::vector<int>& out, int lo, int hi, const HypercubeFace& f, int from, int to, int& next) {
  for (int k = from; k < to; ++k) {
    if (f.bit(k) == 0) {
      out[static_cast<std::size_t>(lo++)] = next++;
    } else {
      out[static_cast<std::size_t>(hi--)] = next++;
    }
  }
  if (lo != hi) throw Error("face: block size mismatch");
  out[static_cast<std::size_t>(lo)] = next++;
}

}  // namespace

Permutation face_to_good_perm(const HypercubeFace& f) {
  const int n = f.n();
  if (f.x() > 0) {
    // The leading bit sends 1 to one end; the rest is the good permutation of
    // the face with that bit removed, shifted up by one.
    std::vector<int> bits;
    for (int k = 1; k <= n; ++k) bits.push_back(f.bit(k));
    const Permutation inner = face_to_good_perm(HypercubeFace(bits, f.x() - 1, f.y() - 1));
    std::vector<int> out;
    if (f.bit(0) == 0) out.push_back(1);
    for (int v : inner.values()) out.push_back(v + 1);
    if (f.bit(0) == 1) out.push_back(1);
    return Permutation(std::move(out));
  }
  // x leads: pivot 1 at slot y, block A = slots [0, y) takes the largest
  // values, block B = slots (y, n+1] the values between.
  std::vector<int> out(static_cast<std::size_t>(n) + 2, 0);
  const int pivot = f.y();
  out[static_cast<std::size_t>(pivot)] = 1;
  int next = 2;
  fill_block(out, pivot + 1, n + 1, f, f.y() + 1, n + 1, next);
  fill_block(out, 0, pivot - 1, f, 1, f.y(), next);
  return Permutation(std::move(out));
}

bool is_good_permutation(std::span<const int> p) {
  static const PopPattern p213 = parse_pattern("2-1-3");
  static const PopPattern p312 = parse_pattern("312");
  static const Matcher m213(p213);
  static const Matcher m312(p312);
  return !m213.occurs(p) && m312.count(p) == 1;
}

FaceReport verify_faces(int n) {
  FaceReport r;
  r.n = n;
  const auto faces = all_faces(n);
  r.faces = static_cast<long long>(faces.size());
  std::set<std::vector<int>> images;
  for (const auto& f : faces) {
    const Permutation p = face_to_good_perm(f);
    if (!is_good_permutation(p)) r.all_images_good = false;
    images.insert(std::vector<int>(p.values().begin(), p.values().end()));
  }
  r.distinct_images = static_cast<long long>(images.size());
  PermutationStream s(n + 2);
  std::set<std::vector<int>> good;
  while (s.next()) {
    if (is_good_permutation(s.current())) good.insert(std::vector<int>(s.current().begin(), s.current().end()));
  }
  r.good_permutations = static_cast<long long>(good.size());
  if (good != images) r.all_images_good = false;
  r.expected = binomial(n + 1, 2).get_si() << (n - 1);
  if (n == 6) {
    r.vector_ok = face_to_good_perm(HypercubeFace::parse("110x0y01")) == Permutation::parse("389457621");
  }
  return r;
}

}  // namespace poplab
