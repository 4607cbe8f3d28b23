#pragma once

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ado/errors.hpp"

namespace ado {

/// Word in the Artin generators of B_n. Letter k > 0 is σ_k, k < 0 is σ_{|k|}^{-1};
/// σ_k is the right-handed half twist of strands k and k+1.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<int> letters = {}) : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw ParseError("braid must have at least one strand");
    for (int k : letters_) check_letter(k);
  }

  /// Parses whitespace- or comma-separated nonzero integers.
  static BraidWord parse(std::string_view text, int strands) {
    std::string buf(text);
    std::replace(buf.begin(), buf.end(), ',', ' ');
    std::istringstream in(buf);
    std::vector<int> letters;
    std::string tok;
    while (in >> tok) {
      char* end = nullptr;
      const long v = std::strtol(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') throw ParseError("invalid braid letter '" + tok + "'");
      if (v == 0) throw ParseError("braid letter 0 is not a generator");
      if (v > 1'000'000 || v < -1'000'000) throw ParseError("braid letter '" + tok + "' out of range");
      letters.push_back(static_cast<int>(v));
    }
    return BraidWord(strands, std::move(letters));
  }

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Inverse word: reversed with signs flipped.
  BraidWord inverse() const {
    std::vector<int> w(letters_.rbegin(), letters_.rend());
    for (int& k : w) k = -k;
    return BraidWord(strands_, std::move(w));
  }

  /// Same word with every sign flipped (the mirror image of the closure).
  BraidWord mirror() const {
    std::vector<int> w = letters_;
    for (int& k : w) k = -k;
    return BraidWord(strands_, std::move(w));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(letters_[i]);
    }
    return s;
  }

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.strands_ != b.strands_) throw std::invalid_argument("braid product: strand counts differ");
    std::vector<int> w = a.letters_;
    w.insert(w.end(), b.letters_.begin(), b.letters_.end());
    return BraidWord(a.strands_, std::move(w));
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  void check_letter(int k) const {
    if (k == 0 || std::abs(k) >= strands_)
      throw ParseError("generator " + std::to_string(k) + " is not valid in B_" + std::to_string(strands_));
  }

  int strands_ = 1;
  std::vector<int> letters_;
};

inline int exponent_sum(const BraidWord& w) {
  int e = 0;
  for (int k : w.letters()) e += k > 0 ? 1 : -1;
  return e;
}

/// Permutation of strand positions (0-based): strand starting at position p
/// ends at perm[p].
inline std::vector<int> closure_permutation(const BraidWord& w) {
  std::vector<int> where(static_cast<std::size_t>(w.strands()));
  for (int p = 0; p < w.strands(); ++p) where[static_cast<std::size_t>(p)] = p;
  // position -> strand currently there
  std::vector<int> at = where;
  for (int k : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(k) - 1);
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> perm(where.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) perm[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
  return perm;
}

/// Cycle lengths of a permutation, descending.
inline std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> lengths;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (auto p = s; !seen[p]; p = static_cast<std::size_t>(perm[p])) {
      seen[p] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

inline bool closure_is_knot(const BraidWord& w) { return cycle_type(closure_permutation(w)).size() == 1; }

/// g^{-1} w g for a single signed generator g.
inline BraidWord conjugate(const BraidWord& w, int generator) {
  const BraidWord g(w.strands(), {generator});
  return g.inverse() * w * g;
}

/// Markov stabilization: w σ_n^{±1} in B_{n+1}.
inline BraidWord stabilize(const BraidWord& w, int sign) {
  std::vector<int> letters = w.letters();
  letters.push_back(sign >= 0 ? w.strands() : -w.strands());
  return BraidWord(w.strands() + 1, std::move(letters));
}

}  // namespace ado
