#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heckoid/errors.hpp"

namespace heckoid {

/// One letter of a word over {a, b} with exponent +-1.
/// code: 0=a, 1=a^{-1}, 2=b, 3=b^{-1}; inverse is code^1.
struct Letter {
  uint8_t code = 0;

  static Letter make(int gen, int exp) {
    return Letter{static_cast<uint8_t>((gen << 1) | (exp < 0 ? 1 : 0))};
  }
  int gen() const { return code >> 1; }  // 0 = a, 1 = b
  int exp() const { return (code & 1) ? -1 : 1; }
  Letter inv() const { return Letter{static_cast<uint8_t>(code ^ 1)}; }
  char ch() const { return "aAbB"[code]; }

  friend bool operator==(const Letter& x, const Letter& y) { return x.code == y.code; }
  friend bool operator!=(const Letter& x, const Letter& y) { return x.code != y.code; }
  friend bool operator<(const Letter& x, const Letter& y) { return x.code < y.code; }
};

inline std::vector<Letter> parse_letters(std::string_view s) {
  std::vector<Letter> out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case 'a': out.push_back(Letter{0}); break;
      case 'A': out.push_back(Letter{1}); break;
      case 'b': out.push_back(Letter{2}); break;
      case 'B': out.push_back(Letter{3}); break;
      case ' ': break;
      default: throw error(std::string("word letter out of {a,A,b,B}: '") + c + "'");
    }
  }
  return out;
}

inline bool is_reduced(std::span<const Letter> v) {
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i + 1] == v[i].inv()) return false;
  return true;
}

/// Freely reduced word over {a, b}.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  std::string str() const {
    std::string s;
    s.reserve(letters.size());
    for (Letter l : letters) s.push_back(l.ch());
    return s;
  }

  Word inverse() const {
    Word r;
    r.letters.reserve(letters.size());
    for (size_t i = letters.size(); i-- > 0;) r.letters.push_back(letters[i].inv());
    return r;
  }

  friend bool operator==(const Word& x, const Word& y) { return x.letters == y.letters; }
  friend bool operator!=(const Word& x, const Word& y) { return !(x == y); }
  friend bool operator<(const Word& x, const Word& y) {
    return std::lexicographical_compare(x.letters.begin(), x.letters.end(),
                                        y.letters.begin(), y.letters.end());
  }
};

inline Word free_reduce(std::span<const Letter> raw) {
  Word w;
  w.letters.reserve(raw.size());
  for (Letter l : raw) {
    if (!w.letters.empty() && w.letters.back() == l.inv())
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

inline Word free_reduce(const std::vector<Letter>& raw) {
  return free_reduce(std::span<const Letter>(raw.data(), raw.size()));
}

inline Word word_from_string(std::string_view s) {
  auto raw = parse_letters(s);
  if (!is_reduced(raw)) throw error("word_from_string: not freely reduced: " + std::string(s));
  Word w;
  w.letters = std::move(raw);
  return w;
}

inline Word concat_reduced(const Word& x, const Word& y) {
  Word r = x;
  for (Letter l : y.letters) {
    if (!r.letters.empty() && r.letters.back() == l.inv())
      r.letters.pop_back();
    else
      r.letters.push_back(l);
  }
  return r;
}

inline Word word_power(const Word& base, long long n) {
  Word r;
  for (long long i = 0; i < n; ++i) r = concat_reduced(r, base);
  return r;
}

inline Word conjugate_word(const Word& g, const Word& w) {
  return concat_reduced(concat_reduced(g, w), g.inverse());
}

inline bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(std::span<const Letter>(w.letters.data(), w.letters.size()))) return false;
  if (w.size() >= 2 && w.letters.front() == w.letters.back().inv()) return false;
  return true;
}

/// Splits w = c * core * c^{-1} with core cyclically reduced.
inline Word cyclic_reduce(const Word& w, Word* conjugator = nullptr) {
  size_t lo = 0, hi = w.letters.size();
  while (hi - lo >= 2 && w.letters[lo] == w.letters[hi - 1].inv()) {
    ++lo;
    --hi;
  }
  if (conjugator) {
    conjugator->letters.assign(w.letters.begin(), w.letters.begin() + lo);
  }
  Word core;
  core.letters.assign(w.letters.begin() + lo, w.letters.begin() + hi);
  return core;
}

inline Word rotate_word(const Word& w, size_t k) {
  Word r;
  size_t n = w.size();
  if (n == 0) return r;
  k %= n;
  r.letters.reserve(n);
  r.letters.insert(r.letters.end(), w.letters.begin() + k, w.letters.end());
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.begin() + k);
  return r;
}

namespace detail {
// Booth's least-rotation index.
inline size_t least_rotation(const std::vector<Letter>& v) {
  size_t n = v.size();
  if (n <= 1) return 0;
  std::vector<size_t> f(2 * n, static_cast<size_t>(-1));
  size_t k = 0;
  for (size_t j = 1; j < 2 * n; ++j) {
    uint8_t sj = v[j % n].code;
    size_t i = f[j - k - 1];
    while (i != static_cast<size_t>(-1) && sj != v[(k + i + 1) % n].code) {
      if (sj < v[(k + i + 1) % n].code) k = j - i - 1;
      i = f[i];
    }
    if (sj != v[(k + i + 1) % n].code) {
      if (sj < v[(k + i + 1) % n].code) k = j;
      f[j - k] = static_cast<size_t>(-1);
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}
}  // namespace detail

/// Cyclic word: cyclically reduced, equality is visual equality of some
/// cyclic shift. Stored in canonical (least) rotation.
struct CyclicWord {
  Word rep;

  CyclicWord() = default;
  explicit CyclicWord(const Word& w) {
    if (!is_cyclically_reduced(w)) throw error("CyclicWord: representative not cyclically reduced");
    rep = rotate_word(w, detail::least_rotation(w.letters));
  }

  size_t size() const { return rep.size(); }
  bool empty() const { return rep.empty(); }
  std::string str() const { return rep.str(); }

  friend bool operator==(const CyclicWord& x, const CyclicWord& y) { return x.rep == y.rep; }
  friend bool operator!=(const CyclicWord& x, const CyclicWord& y) { return !(x == y); }
  friend bool operator<(const CyclicWord& x, const CyclicWord& y) { return x.rep < y.rep; }
};

// ---------------------------------------------------------------------------
// S-sequences: run lengths of maximal constant-exponent-sign blocks.
// ---------------------------------------------------------------------------

using Seq = std::vector<long long>;

inline std::string seq_str(const Seq& s) {
  std::string out = "(";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

inline Seq s_sequence(const Word& w) {
  if (w.empty()) throw error("s_sequence: empty word");
  Seq runs;
  int sign = w.letters[0].exp();
  long long len = 0;
  for (Letter l : w.letters) {
    if (l.exp() == sign) {
      ++len;
    } else {
      runs.push_back(len);
      sign = l.exp();
      len = 1;
    }
  }
  runs.push_back(len);
  return runs;
}

namespace detail {
inline size_t least_rotation_seq(const Seq& v) {
  size_t n = v.size();
  if (n <= 1) return 0;
  size_t best = 0;
  for (size_t c = 1; c < n; ++c) {
    for (size_t i = 0; i < n; ++i) {
      long long x = v[(c + i) % n], y = v[(best + i) % n];
      if (x != y) {
        if (x < y) best = c;
        break;
      }
    }
  }
  return best;
}
}  // namespace detail

/// Cyclic sequence of positive integers, compared modulo rotation.
struct CyclicSeq {
  Seq vals;  // canonical (least) rotation

  CyclicSeq() = default;
  explicit CyclicSeq(Seq v) : vals(std::move(v)) {
    std::rotate(vals.begin(), vals.begin() + detail::least_rotation_seq(vals), vals.end());
  }

  size_t size() const { return vals.size(); }
  friend bool operator==(const CyclicSeq& x, const CyclicSeq& y) { return x.vals == y.vals; }
  friend bool operator!=(const CyclicSeq& x, const CyclicSeq& y) { return !(x == y); }

  std::string str() const {
    std::string out = "<";
    for (size_t i = 0; i < vals.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(vals[i]);
    }
    return out + ">";
  }
};

/// Cyclic run-length encoding. Words with a single exponent sign have no
/// cyclic alternation and are rejected.
inline CyclicSeq cyclic_s_sequence(const CyclicWord& w) {
  if (w.empty()) throw error("cyclic_s_sequence: empty cyclic word");
  Seq runs = s_sequence(w.rep);
  if (runs.size() == 1)
    throw error("cyclic_s_sequence: single-sign word has no sign alternation");
  if (w.rep.letters.front().exp() == w.rep.letters.back().exp()) {
    // the first and last linear runs wrap into one cyclic run
    runs.front() += runs.back();
    runs.pop_back();
  }
  return CyclicSeq(std::move(runs));
}

inline bool is_alternating(const Word& w) {
  for (size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (w.letters[i].gen() == w.letters[i + 1].gen()) return false;
  return true;
}

inline bool is_cyclically_alternating(const CyclicWord& w) {
  if (!is_alternating(w.rep)) return false;
  if (w.size() >= 2 && w.rep.letters.front().gen() == w.rep.letters.back().gen()) return false;
  return true;
}

/// Contiguous ("without leap") cyclic subsequence test: some rotation of cs
/// starts with the pattern. Patterns longer than the cycle never match.
inline bool contains_subsequence(const CyclicSeq& cs, const Seq& pattern) {
  if (pattern.empty()) throw error("contains_subsequence: empty pattern");
  size_t n = cs.vals.size();
  if (pattern.size() > n) return false;
  for (size_t rot = 0; rot < n; ++rot) {
    bool ok = true;
    for (size_t i = 0; i < pattern.size(); ++i) {
      if (cs.vals[(rot + i) % n] != pattern[i]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

/// Number of rotations at which `block` occurs as a contiguous block
/// (overlaps allowed).
inline long long count_block_occurrences(const CyclicSeq& cs, const Seq& block) {
  if (block.empty() || block.size() > cs.vals.size()) return 0;
  size_t n = cs.vals.size();
  long long count = 0;
  for (size_t rot = 0; rot < n; ++rot) {
    bool ok = true;
    for (size_t i = 0; i < block.size(); ++i) {
      if (cs.vals[(rot + i) % n] != block[i]) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

inline bool seq_symmetric(const Seq& s) {
  for (size_t i = 0, j = s.size(); i < j; ++i, --j)
    if (s[i] != s[j - 1]) return false;
  return true;
}

}  // namespace heckoid
