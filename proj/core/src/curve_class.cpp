#include "adsvol/curve_class.hpp"

#include <algorithm>
#include <cctype>

namespace adsvol::curves {

std::vector<Letter> inverse_word(const std::vector<Letter>& w) {
  std::vector<Letter> r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(it->inverted());
  return r;
}

std::vector<Letter> cyclically_reduce(std::vector<Letter> w) {
  // Inner reduction.
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverted()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  // Wrap-around reduction.
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == out[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  return {out.begin() + lo, out.begin() + hi};
}

namespace {

std::vector<Letter> min_rotation(const std::vector<Letter>& w) {
  std::vector<Letter> best = w;
  std::vector<Letter> cur = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end(),
                                     [](Letter x, Letter y) { return x.code() < y.code(); })) {
      best = cur;
    }
  }
  return best;
}

bool word_less(const std::vector<Letter>& x, const std::vector<Letter>& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [](Letter a, Letter b) { return a.code() < b.code(); });
}

}  // namespace

CurveClass::CurveClass(std::vector<Letter> word) {
  std::vector<Letter> red = cyclically_reduce(std::move(word));
  if (red.empty()) fail(ErrorKind::InvalidInput, "word reduces to the trivial class");
  std::vector<Letter> fwd = min_rotation(red);
  std::vector<Letter> bwd = min_rotation(inverse_word(red));
  word_ = word_less(bwd, fwd) ? bwd : fwd;
}

std::strong_ordering operator<=>(const CurveClass& x, const CurveClass& y) {
  if (x.word_.size() != y.word_.size()) return x.word_.size() <=> y.word_.size();
  for (std::size_t i = 0; i < x.word_.size(); ++i) {
    if (x.word_[i].code() != y.word_[i].code()) return x.word_[i].code() <=> y.word_[i].code();
  }
  return std::strong_ordering::equal;
}

CurveClass CurveClass::parse(std::string_view text, int genus) {
  if (genus < 2) fail(ErrorKind::GenusTooSmall, "genus must be at least 2");
  int n_gens = 2 * genus;
  std::vector<Letter> w;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '.') continue;
    bool inv = std::isupper(static_cast<unsigned char>(ch)) != 0;
    char base = inv ? char(std::tolower(static_cast<unsigned char>(ch))) : ch;
    int idx = base - 'a';
    if (idx < 0 || idx >= n_gens) {
      fail(ErrorKind::InvalidInput,
           std::string("unknown generator letter '") + ch + "' for genus " + std::to_string(genus));
    }
    w.push_back({static_cast<std::uint8_t>(idx), inv});
  }
  return CurveClass(std::move(w));
}

std::string CurveClass::str() const {
  std::string s;
  s.reserve(word_.size());
  for (const Letter& l : word_) {
    char ch = char('a' + l.gen);
    s.push_back(l.inverse ? char(std::toupper(static_cast<unsigned char>(ch))) : ch);
  }
  return s;
}

}  // namespace adsvol::curves
