#include "poplab/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>
#include <vector>

#include "poplab/error.hpp"

namespace poplab {

namespace {

bool is_base(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

struct Token {
  std::string letter;
  std::size_t position;
};

}  // namespace

bool is_notation_letter(const std::string& label) {
  if (label.empty() || !is_base(label[0])) return false;
  return std::all_of(label.begin() + 1, label.end(), [](char c) { return c == '\''; });
}

PopPattern parse_pattern(std::string_view text, const std::optional<Poset>& poset) {
  // Strip whitespace but keep source offsets for diagnostics.
  std::string src;
  std::vector<std::size_t> at;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    src.push_back(text[i]);
    at.push_back(i);
  }
  auto where = [&](std::size_t k) { return k < at.size() ? at[k] : text.size(); };
  if (src.empty()) throw ParseError("empty pattern", 0);

  std::size_t k = 0;
  bool anchored_left = false;
  bool anchored_right = false;
  if (src[k] == '[') {
    anchored_left = true;
    ++k;
  }

  std::vector<Token> letters;
  std::vector<Gap> gaps;
  bool expect_segment = true;
  bool segment_open = false;
  while (k < src.size()) {
    const char c = src[k];
    if (is_base(c)) {
      Token t{std::string(1, c), where(k)};
      ++k;
      while (k < src.size() && src[k] == '\'') t.letter.push_back(src[k++]);
      if (segment_open) gaps.push_back(Gap::adjacent);
      letters.push_back(std::move(t));
      segment_open = true;
      expect_segment = false;
    } else if (c == '-' || c == '~') {
      if (expect_segment) throw ParseError("empty segment before separator", where(k));
      gaps.push_back(c == '-' ? Gap::free : Gap::strict);
      segment_open = false;
      expect_segment = true;
      ++k;
    } else if (c == ']') {
      if (expect_segment) throw ParseError("empty segment before ']'", where(k));
      anchored_right = true;
      ++k;
      if (k != src.size()) throw ParseError("unbalanced bracket: text after ']'", where(k));
    } else if (c == '[') {
      throw ParseError("unbalanced bracket: '[' must open the pattern", where(k));
    } else if (c == '\'') {
      throw ParseError("apostrophe without a letter", where(k));
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", where(k));
    }
  }
  if (expect_segment) throw ParseError("empty segment at end of pattern", where(k));

  std::unordered_set<std::string> seen;
  for (const auto& t : letters) {
    if (!seen.insert(t.letter).second) {
      throw ParseError("duplicate letter '" + t.letter + "'", t.position);
    }
  }

  std::vector<std::string> names;
  for (const auto& t : letters) names.push_back(t.letter);

  if (poset) {
    for (const auto& t : letters) {
      if (!poset->contains(t.letter)) {
        throw ParseError("unknown letter '" + t.letter + "' for the given poset", t.position);
      }
    }
    return PopPattern(*poset, std::move(names), std::move(gaps), anchored_left, anchored_right);
  }

  for (const auto& t : letters) {
    if (t.letter.size() > 1) {
      throw ParseError("primed letter '" + t.letter + "' needs a poset", t.position);
    }
    if (!std::isdigit(static_cast<unsigned char>(t.letter[0]))) {
      throw ParseError("letter '" + t.letter + "' needs a poset", t.position);
    }
  }
  std::vector<std::string> order = names;
  std::sort(order.begin(), order.end());
  return PopPattern(Poset::chain(std::move(order)), std::move(names), std::move(gaps),
                    anchored_left, anchored_right);
}

std::string print_pattern(const PopPattern& p) {
  std::string out;
  if (p.anchored_left()) out.push_back('[');
  for (std::size_t i = 0; i < p.length(); ++i) {
    const auto& l = p.letters()[i];
    if (!is_notation_letter(l)) {
      throw Error("print_pattern: label '" + l + "' has no text form; use the JSON form");
    }
    if (i > 0) {
      switch (p.gaps()[i - 1]) {
        case Gap::adjacent: break;
        case Gap::free: out.push_back('-'); break;
        case Gap::strict: out.push_back('~'); break;
      }
    }
    out += l;
  }
  if (p.anchored_right()) out.push_back(']');
  return out;
}

}  // namespace poplab
