#include "poplab/pattern.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <unordered_set>

#include "poplab/error.hpp"

namespace poplab {

const char* to_string(Gap g) {
  switch (g) {
    case Gap::adjacent: return "ADJ";
    case Gap::free: return "FREE";
    case Gap::strict: return "STRICT";
  }
  return "?";
}

Gap gap_from_string(const std::string& s) {
  if (s == "ADJ") return Gap::adjacent;
  if (s == "FREE") return Gap::free;
  if (s == "STRICT") return Gap::strict;
  throw Error("unknown gap kind '" + s + "' (expected ADJ, FREE or STRICT)");
}

PopPattern::PopPattern(Poset poset, std::vector<std::string> letters, std::vector<Gap> gaps,
                       bool anchored_left, bool anchored_right)
    : poset_(std::move(poset)),
      letters_(std::move(letters)),
      gaps_(std::move(gaps)),
      anchored_left_(anchored_left),
      anchored_right_(anchored_right) {
  if (letters_.empty()) throw Error("pattern: needs at least one letter");
  if (gaps_.size() + 1 != letters_.size()) {
    throw Error("pattern: " + std::to_string(letters_.size()) + " letters need " +
                std::to_string(letters_.size() - 1) + " gaps, got " +
                std::to_string(gaps_.size()));
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : letters_) {
    if (!seen.insert(l).second) throw Error("pattern: duplicate letter '" + l + "'");
    auto idx = poset_.index_of(l);
    if (!idx) throw Error("pattern: letter '" + l + "' is not an element of the poset");
    index_.push_back(*idx);
  }
}

PopPattern PopPattern::segmented(Poset poset, std::vector<std::string> letters) {
  std::vector<Gap> gaps(letters.empty() ? 0 : letters.size() - 1, Gap::adjacent);
  return PopPattern(std::move(poset), std::move(letters), std::move(gaps));
}

bool PopPattern::is_segmented() const noexcept {
  return std::all_of(gaps_.begin(), gaps_.end(), [](Gap g) { return g == Gap::adjacent; });
}

PopPattern reverse(const PopPattern& p) {
  std::vector<std::string> letters(p.letters().rbegin(), p.letters().rend());
  std::vector<Gap> gaps(p.gaps().rbegin(), p.gaps().rend());
  return PopPattern(p.poset(), std::move(letters), std::move(gaps), p.anchored_right(),
                    p.anchored_left());
}

PopPattern complement(const PopPattern& p) {
  return PopPattern(p.poset().dual(), p.letters(), p.gaps(), p.anchored_left(),
                    p.anchored_right());
}

PopPattern join_free(const PopPattern& p, const PopPattern& q) {
  if (p.anchored_right() || q.anchored_left()) {
    throw Error("join_free: inner anchors cannot be joined by a dash");
  }
  for (const auto& l : q.poset().elements()) {
    if (p.poset().contains(l)) throw Error("join_free: label '" + l + "' occurs in both posets");
  }
  auto letters = p.letters();
  letters.insert(letters.end(), q.letters().begin(), q.letters().end());
  auto gaps = p.gaps();
  gaps.push_back(Gap::free);
  gaps.insert(gaps.end(), q.gaps().begin(), q.gaps().end());
  return PopPattern(p.poset().disjoint_union(q.poset()), std::move(letters), std::move(gaps),
                    p.anchored_left(), q.anchored_right());
}

PopPattern relabel(const PopPattern& p, const std::string& suffix) {
  std::vector<std::string> elements;
  for (const auto& e : p.poset().elements()) elements.push_back(e + suffix);
  std::vector<Poset::Relation> rel;
  for (const auto& [a, b] : p.poset().relations()) rel.emplace_back(a + suffix, b + suffix);
  std::vector<std::string> letters;
  for (const auto& l : p.letters()) letters.push_back(l + suffix);
  return PopPattern(Poset::build(std::move(elements), rel), std::move(letters), p.gaps(),
                    p.anchored_left(), p.anchored_right());
}

namespace {

constexpr std::size_t kMaxPatternLength = 64;

std::atomic<bool>& verification_flag() {
  static std::atomic<bool> flag = [] {
    if (const char* env = std::getenv("POPLAB_VERIFY")) return env[0] == '1';
#ifdef NDEBUG
    return false;
#else
    return true;
#endif
  }();
  return flag;
}

}  // namespace

bool verification_mode() noexcept { return verification_flag().load(std::memory_order_relaxed); }
void set_verification_mode(bool on) noexcept { verification_flag().store(on); }

Matcher::Matcher(const PopPattern& p)
    : m_(p.length()),
      segmented_(p.is_segmented()),
      anchored_left_(p.anchored_left()),
      anchored_right_(p.anchored_right()),
      gaps_(p.gaps()),
      letters_(p.length()),
      min_tail_(p.length(), 0) {
  if (m_ > kMaxPatternLength) throw Error("pattern: longer than 64 letters is not supported");
  for (std::size_t j = 0; j < m_; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (p.position_less(i, j)) letters_[j].below.push_back(static_cast<int>(i));
      if (p.position_less(j, i)) letters_[j].above.push_back(static_cast<int>(i));
    }
  }
  for (std::size_t j = m_ - 1; j-- > 0;) {
    min_tail_[j] = min_tail_[j + 1] + (gaps_[j] == Gap::strict ? 2 : 1);
  }
  if (segmented_ && m_ <= static_cast<std::size_t>(simd::kMaxLength)) {
    // Cover pairs of the order induced on the pattern positions suffice.
    for (std::size_t a = 0; a < m_; ++a) {
      for (std::size_t b = 0; b < m_; ++b) {
        if (!p.position_less(a, b)) continue;
        bool cover = true;
        for (std::size_t c = 0; c < m_ && cover; ++c) {
          cover = !(p.position_less(a, c) && p.position_less(c, b));
        }
        if (cover) {
          pairs_.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
        }
      }
    }
  }
}

template <class Visit>
bool Matcher::search(std::span<const int> seq, Visit&& visit) const {
  const int n = static_cast<int>(seq.size());
  if (static_cast<int>(m_) > n) return false;
  std::array<int, kMaxPatternLength> pos{};
  const int m = static_cast<int>(m_);

  // Iterative DFS; pos[j] holds the current candidate for letter j.
  auto first_candidate = [&](int j) {
    if (j == 0) return 0;
    return pos[j - 1] + (gaps_[j - 1] == Gap::strict ? 2 : 1);
  };
  auto last_candidate = [&](int j) {
    int hi = n - 1 - min_tail_[j];
    if (j == 0 && anchored_left_) hi = std::min(hi, 0);
    if (j > 0 && gaps_[j - 1] == Gap::adjacent) hi = std::min(hi, pos[j - 1] + 1);
    return hi;
  };
  auto fits = [&](int j, int at) {
    if (j == m - 1 && anchored_right_ && at != n - 1) return false;
    const int v = seq[at];
    for (int i : letters_[j].below) if (!(seq[pos[i]] < v)) return false;
    for (int i : letters_[j].above) if (!(v < seq[pos[i]])) return false;
    return true;
  };

  std::array<int, kMaxPatternLength> hi{};
  int j = 0;
  pos[0] = first_candidate(0) - 1;
  hi[0] = last_candidate(0);
  while (j >= 0) {
    int at = pos[j] + 1;
    while (at <= hi[j] && !fits(j, at)) ++at;
    if (at > hi[j]) {
      --j;
      continue;
    }
    pos[j] = at;
    if (j == m - 1) {
      if (visit(std::span<const int>(pos.data(), m_))) return true;
      continue;
    }
    ++j;
    pos[j] = first_candidate(j) - 1;
    hi[j] = last_candidate(j);
  }
  return false;
}

std::uint32_t Matcher::window_mask(const simd::PackedSeq& seq) const {
  const int n = seq.n;
  const int m = static_cast<int>(m_);
  std::uint32_t mask = simd::active_kernels().window_mask(seq, m, pairs_.data(),
                                                          static_cast<int>(pairs_.size()));
  if (mask != 0 && anchored_left_) mask &= 1u;
  if (mask != 0 && anchored_right_) mask &= std::uint32_t{1} << (n - m);
  return mask;
}

std::uint32_t Matcher::window_mask(std::span<const int> seq) const {
  require_segmented("window_mask");
  simd::PackedSeq packed;
  if (!packed.load(seq) || m_ > static_cast<std::size_t>(simd::kMaxLength)) {
    throw Error("window_mask: sequence longer than 32 or values out of range");
  }
  return window_mask(packed);
}

std::vector<Occurrence> Matcher::occurrences(std::span<const int> seq) const {
  std::vector<Occurrence> out;
  search(seq, [&](std::span<const int> pos) {
    out.emplace_back(pos.begin(), pos.end());
    return false;
  });
  return out;
}

std::size_t Matcher::count(std::span<const int> seq) const {
  if (segmented_ && m_ <= simd::kMaxLength) {
    simd::PackedSeq packed;
    if (packed.load(seq)) return static_cast<std::size_t>(std::popcount(window_mask(packed)));
  }
  std::size_t c = 0;
  search(seq, [&](std::span<const int>) {
    ++c;
    return false;
  });
  return c;
}

bool Matcher::occurs(std::span<const int> seq) const {
  if (segmented_ && m_ <= simd::kMaxLength) {
    simd::PackedSeq packed;
    if (packed.load(seq)) return window_mask(packed) != 0;
  }
  return search(seq, [](std::span<const int>) { return true; });
}

void Matcher::require_segmented(const char* op) const {
  if (!segmented_) throw Error(std::string(op) + ": pattern must be segmented");
}

std::uint32_t Matcher::window_mask_scalar(std::span<const int> seq) const {
  std::uint32_t mask = 0;
  search(seq, [&](std::span<const int> pos) {
    mask |= std::uint32_t{1} << pos[0];
    return false;
  });
  return mask;
}

bool Matcher::quasi_avoided_by(std::span<const int> seq) const {
  require_segmented("quasi_avoids");
  if (anchored_left_ || anchored_right_) throw Error("quasi_avoids: pattern must be unanchored");
  const int n = static_cast<int>(seq.size());
  if (static_cast<int>(m_) > n) return false;
  if (n > simd::kMaxLength) {
    auto occ = occurrences(seq);
    return occ.size() == 1 && occ[0][0] == n - static_cast<int>(m_);
  }
  return window_mask(seq) == (std::uint32_t{1} << (n - static_cast<int>(m_)));
}

int Matcher::max_nonoverlapping(std::span<const int> seq) const {
  require_segmented("max_nonoverlapping");
  const int n = static_cast<int>(seq.size());
  if (n > simd::kMaxLength) throw Error("max_nonoverlapping: sequence longer than 32");
  std::uint32_t mask = window_mask(seq);
  const int m = static_cast<int>(m_);
  // Equal-length windows: earliest start is earliest right endpoint.
  int taken = 0;
  while (mask != 0) {
    const int s = std::countr_zero(mask);
    ++taken;
    const int next = s + m;
    mask = next >= 32 ? 0 : (mask & ~simd::low_bits(next));
  }
  if (verification_mode()) {
    const int dp = max_nonoverlapping_dp(seq);
    if (dp != taken) throw Error("max_nonoverlapping: greedy and dynamic programming disagree");
  }
  return taken;
}

int Matcher::max_nonoverlapping_dp(std::span<const int> seq) const {
  require_segmented("max_nonoverlapping");
  const int n = static_cast<int>(seq.size());
  const int m = static_cast<int>(m_);
  std::uint32_t mask = n <= simd::kMaxLength ? window_mask_scalar(seq) : 0;
  if (n > simd::kMaxLength) throw Error("max_nonoverlapping: sequence longer than 32");
  std::vector<int> best(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    best[i] = best[i - 1];
    if (i >= m && (mask >> (i - m) & 1u)) best[i] = std::max(best[i], best[i - m] + 1);
  }
  return best[n];
}

std::vector<Occurrence> occurrences(const PopPattern& p, std::span<const int> seq) {
  return Matcher(p).occurrences(seq);
}

std::size_t count_occurrences(const PopPattern& p, std::span<const int> seq) {
  return Matcher(p).count(seq);
}

bool avoids(const PopPattern& p, std::span<const int> seq) { return !Matcher(p).occurs(seq); }

bool avoids_all(std::span<const PopPattern> patterns, std::span<const int> seq) {
  return std::all_of(patterns.begin(), patterns.end(),
                     [&](const PopPattern& p) { return avoids(p, seq); });
}

bool quasi_avoids(const PopPattern& p, std::span<const int> seq) {
  return Matcher(p).quasi_avoided_by(seq);
}

int max_nonoverlapping(const PopPattern& p, std::span<const int> seq) {
  return Matcher(p).max_nonoverlapping(seq);
}

std::size_t word_occurrences(const PopPattern& p, std::span<const int> word) {
  return Matcher(p).count(word);
}

}  // namespace poplab
