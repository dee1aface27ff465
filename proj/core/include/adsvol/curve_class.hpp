#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "adsvol/common.hpp"

namespace adsvol::curves {

// One letter of a word in the standard generators a_1, b_1, ..., a_g, b_g.
struct Letter {
  std::uint8_t gen = 0;  // 0 .. 2g-1
  bool inverse = false;

  int code() const { return 2 * int(gen) + (inverse ? 1 : 0); }
  Letter inverted() const { return {gen, !inverse}; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

std::vector<Letter> cyclically_reduce(std::vector<Letter> w);
std::vector<Letter> inverse_word(const std::vector<Letter>& w);

// Free-homotopy class of a nonempty word: cyclically reduced, canonical under
// rotation and inversion (lexicographically minimal letter codes).
class CurveClass {
 public:
  explicit CurveClass(std::vector<Letter> word);
  static CurveClass parse(std::string_view text, int genus);

  const std::vector<Letter>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  std::string str() const;

  friend bool operator==(const CurveClass& x, const CurveClass& y) { return x.word_ == y.word_; }
  friend std::strong_ordering operator<=>(const CurveClass& x, const CurveClass& y);

 private:
  std::vector<Letter> word_;
};

}  // namespace adsvol::curves
