#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heckoid/rational.hpp"
#include "heckoid/word.hpp"

namespace heckoid {

/// u_r together with its palindromic core (the hat word).
struct SlopeWord {
  Slope slope;
  Word word;  // u_r
  Word hat;   // the middle factor of Riley's formula
};

/// Riley's formula for the word u_{q/p} read off the line of slope q/p.
/// Defined for 0 <= s <= 1 and s = inf; u_inf is empty, u_0 = ab, u_1 = aB.
inline SlopeWord riley_word(const Slope& s) {
  SlopeWord out;
  out.slope = s;
  if (s.is_infinite()) return out;
  if (s < Rational(0) || s > Rational(1))
    throw error("riley_word: slope must lie in [0,1] or be inf, got " + s.str());
  if (s == Rational(0)) {
    out.word = word_from_string("ab");
    return out;
  }
  if (s == Rational(1)) {
    out.word = word_from_string("aB");
    return out;
  }
  if (!s.num().fits_int64() || !s.den().fits_int64())
    throw error("riley_word: slope too large");
  const long long q = s.num().to_int64();
  const long long p = s.den().to_int64();

  std::vector<Letter> hat;
  hat.reserve(p - 1);
  for (long long i = 1; i <= p - 1; ++i) {
    // epsilon_i = (-1)^floor(iq/p); generators alternate b, a, b, a, ...
    int eps = ((i * q / p) % 2 == 0) ? 1 : -1;
    int gen = (i % 2 == 1) ? 1 : 0;
    hat.push_back(Letter::make(gen, eps));
  }
  out.hat.letters = hat;

  std::vector<Letter> u;
  u.reserve(2 * p);
  u.push_back(Letter::make(0, 1));  // a
  u.insert(u.end(), hat.begin(), hat.end());
  if (p % 2 == 1) {
    u.push_back(Letter::make(1, (q % 2 == 0) ? 1 : -1));  // b^{(-1)^q}
  } else {
    u.push_back(Letter::make(0, -1));  // a^{-1}
  }
  Word hat_inv = out.hat.inverse();
  u.insert(u.end(), hat_inv.letters.begin(), hat_inv.letters.end());

  if (!is_reduced(std::span<const Letter>(u.data(), u.size())))
    throw internal_error("riley_word: produced an unreduced word");
  out.word.letters = std::move(u);
  return out;
}

inline Seq slope_s_sequence(const Slope& r) {
  if (r.is_infinite() || r <= Rational(0) || r > Rational(1))
    throw error("slope_s_sequence: slope must satisfy 0 < r <= 1");
  return s_sequence(riley_word(r).word);
}

inline CyclicSeq slope_cyclic_s_sequence(const Slope& r) {
  if (r.is_infinite() || r <= Rational(0) || r > Rational(1))
    throw error("slope_cyclic_s_sequence: slope must satisfy 0 < r <= 1");
  return cyclic_s_sequence(CyclicWord(riley_word(r).word));
}

/// T-sequence of a slope with continued fraction of length >= 2: the run
/// counts (t_1,...,t_s) in the two-letter structure of S(r). Which value is
/// counted depends on whether m_2 = 1 or m_2 >= 2.
inline Seq t_sequence(const Slope& r) {
  ContinuedFraction cf = to_continued_fraction(r);
  if (cf.terms.size() < 2) throw error("t_sequence: defined only for k >= 2");
  const long long m = cf.terms[0];
  const long long m2 = cf.terms[1];
  Seq S = slope_s_sequence(r);
  Seq t;
  if (m2 == 1) {
    // S(r) = (t1<m+1>, m, t2<m+1>, m, ..., ts<m+1>, m)
    size_t i = 0;
    while (i < S.size()) {
      long long run = 0;
      while (i < S.size() && S[i] == m + 1) {
        ++run;
        ++i;
      }
      if (run == 0 || i >= S.size() || S[i] != m)
        throw internal_error("t_sequence: m2=1 shape violated at " + r.str());
      t.push_back(run);
      ++i;  // the single m
    }
  } else {
    // S(r) = (m+1, t1<m>, m+1, t2<m>, ..., m+1, ts<m>)
    size_t i = 0;
    while (i < S.size()) {
      if (S[i] != m + 1)
        throw internal_error("t_sequence: m2>=2 shape violated at " + r.str());
      ++i;
      long long run = 0;
      while (i < S.size() && S[i] == m) {
        ++run;
        ++i;
      }
      if (run == 0) throw internal_error("t_sequence: empty m-run at " + r.str());
      t.push_back(run);
    }
  }
  return t;
}

inline CyclicSeq slope_cyclic_t_sequence(const Slope& r) { return CyclicSeq(t_sequence(r)); }

/// r~ : drop the second continued-fraction term if it is 1, else decrement it.
inline Slope reduced_slope(const Slope& r) {
  ContinuedFraction cf = to_continued_fraction(r);
  if (cf.terms.size() < 2) throw error("reduced_slope: defined only for k >= 2");
  ContinuedFraction red;
  if (cf.terms[1] == 1) {
    red.terms.assign(cf.terms.begin() + 2, cf.terms.end());
  } else {
    red.terms.push_back(cf.terms[1] - 1);
    red.terms.insert(red.terms.end(), cf.terms.begin() + 2, cf.terms.end());
  }
  return from_continued_fraction(red);
}

struct SlopeDecomposition {
  Seq s1, s2;  // S(r) = (S1, S2, S1, S2); S1 empty iff k = 1
};

namespace detail {
inline bool check_decomposition_conditions(const Seq& S, size_t split, long long m,
                                           size_t k) {
  const size_t q = S.size() / 2;
  Seq s1(S.begin(), S.begin() + split);
  Seq s2(S.begin() + split, S.begin() + q);
  if (s2.empty()) return false;
  if (!seq_symmetric(s1) || !seq_symmetric(s2)) return false;
  if (s1.empty() != (k == 1)) return false;
  if (!s1.empty() && (s1.front() != m + 1 || s1.back() != m + 1)) return false;
  if (s2.front() != m || s2.back() != m) return false;
  return true;
}

inline void append_run(Seq& out, long long value, long long count) {
  for (long long i = 0; i < count; ++i) out.push_back(value);
}
}  // namespace detail

/// Direct split of S(r) into (S1, S2, S1, S2).
inline SlopeDecomposition s1_s2_decomposition(const Slope& r) {
  if (r.is_infinite() || r <= Rational(0) || r >= Rational(1))
    throw error("s1_s2_decomposition: slope must satisfy 0 < r < 1");
  ContinuedFraction cf = to_continued_fraction(r);
  const long long m = cf.terms[0];
  const size_t k = cf.terms.size();
  Seq S = slope_s_sequence(r);
  if (S.size() % 2 != 0)
    throw internal_error("s1_s2_decomposition: odd run count for " + r.str());
  const size_t q = S.size() / 2;
  for (size_t i = 0; i < q; ++i)
    if (S[i] != S[i + q])
      throw internal_error("s1_s2_decomposition: S(r) not q-periodic for " + r.str());

  std::optional<size_t> found;
  for (size_t split = 0; split < q; ++split) {
    if (!detail::check_decomposition_conditions(S, split, m, k)) continue;
    if (found)
      throw internal_error("s1_s2_decomposition: ambiguous split for " + r.str());
    found = split;
  }
  if (!found) throw internal_error("s1_s2_decomposition: no valid split for " + r.str());
  SlopeDecomposition d;
  d.s1.assign(S.begin(), S.begin() + *found);
  d.s2.assign(S.begin() + *found, S.begin() + q);
  return d;
}

/// Same decomposition built by the recursion on r~ instead of splitting S(r);
/// kept as a mutual oracle for s1_s2_decomposition.
inline SlopeDecomposition s1_s2_via_recursion(const Slope& r) {
  ContinuedFraction cf = to_continued_fraction(r);
  const long long m = cf.terms[0];
  const size_t k = cf.terms.size();
  SlopeDecomposition d;
  if (k == 1) {
    d.s2.push_back(m);
    return d;
  }
  const long long m2 = cf.terms[1];
  if (k == 2) {
    d.s1.push_back(m + 1);
    detail::append_run(d.s2, m, m2 - 1);
    return d;
  }
  if (m2 == 1 && k == 3) {
    detail::append_run(d.s1, m + 1, cf.terms[2]);
    d.s2.push_back(m);
    return d;
  }
  SlopeDecomposition tilde = s1_s2_via_recursion(reduced_slope(r));
  const Seq& t1 = tilde.s1;
  const Seq& t2 = tilde.s2;
  if (m2 == 1) {
    // blocks of (m+1), sizes T1 inside S1 and T2 inside S2, single-m joints
    for (size_t i = 0; i < t1.size(); ++i) {
      if (i) d.s1.push_back(m);
      detail::append_run(d.s1, m + 1, t1[i]);
    }
    d.s2.push_back(m);
    for (size_t i = 0; i < t2.size(); ++i) {
      detail::append_run(d.s2, m + 1, t2[i]);
      d.s2.push_back(m);
    }
  } else {
    // m2 >= 2: blocks of m, sizes T2 inside S1 and T1 inside S2
    d.s1.push_back(m + 1);
    for (size_t i = 0; i < t2.size(); ++i) {
      detail::append_run(d.s1, m, t2[i]);
      d.s1.push_back(m + 1);
    }
    for (size_t i = 0; i < t1.size(); ++i) {
      if (i) d.s2.push_back(m + 1);
      detail::append_run(d.s2, m, t1[i]);
    }
  }
  return d;
}

/// Recovers q/p from a cyclic S-sequence of the (S1,S2,S1,S2) shape:
/// p = sum of S1 and S2 entries, q = |S1| + |S2|. Self-verifying.
inline Slope recover_slope(const CyclicSeq& cs) {
  const size_t len = cs.size();
  if (len == 0 || len % 2 != 0)
    throw error("recover_slope: cyclic sequence has no (S1,S2,S1,S2) shape");
  const size_t q = len / 2;
  std::optional<Slope> result;
  for (size_t rot = 0; rot < len; ++rot) {
    Seq S(len);
    for (size_t i = 0; i < len; ++i) S[i] = cs.vals[(rot + i) % len];
    bool periodic = true;
    for (size_t i = 0; i < q && periodic; ++i) periodic = S[i] == S[i + q];
    if (!periodic) continue;
    for (size_t split = 0; split < q; ++split) {
      Seq s2(S.begin() + split, S.begin() + q);
      if (s2.empty()) continue;
      const long long m = s2.back();
      const size_t k_guess = split == 0 ? 1 : 2;  // only empty-vs-not matters below
      if (!detail::check_decomposition_conditions(S, split, m, k_guess)) continue;
      if (split == 0 && s2.size() != 1) continue;  // S1 empty happens only for r = 1/m
      long long psum = 0;
      for (size_t i = 0; i < q; ++i) psum += S[i];
      Slope candidate(BigInt(static_cast<long long>(q)), BigInt(psum));
      if (candidate.num() != BigInt(static_cast<long long>(q))) continue;  // q,p not coprime
      if (slope_cyclic_s_sequence(candidate) != cs) continue;
      if (result && *result != candidate)
        throw internal_error("recover_slope: ambiguous recovery");
      result = candidate;
    }
  }
  if (!result) throw error("recover_slope: sequence is not a cyclic S-sequence of a slope");
  return *result;
}

/// Upper presentation <a,b | u_r^n>.
struct UpperPresentation {
  Slope r;
  long long n = 0;
  Word relator;  // u_r^n, cyclically reduced, length 2pn
};

inline UpperPresentation make_presentation(const Slope& r, long long n) {
  if (n < 2) throw error("make_presentation: index n must be >= 2");
  if (r.is_infinite() || r <= Rational(0) || r >= Rational(1))
    throw error("make_presentation: slope must satisfy 0 < r < 1");
  UpperPresentation pres;
  pres.r = r;
  pres.n = n;
  Word u = riley_word(r).word;
  pres.relator.letters.reserve(u.size() * n);
  for (long long i = 0; i < n; ++i)
    pres.relator.letters.insert(pres.relator.letters.end(), u.letters.begin(),
                                u.letters.end());
  if (!is_cyclically_reduced(pres.relator))
    throw internal_error("make_presentation: relator not cyclically reduced");
  return pres;
}

/// Which pattern the corollary to the recursion predicts, and whether it holds.
struct CorollaryReport {
  long long m = 0;
  long long m2 = 0;
  bool exempt = false;  // r = [m,2] = 2/(2m+1) has no (m,m) in S2
  Seq pattern;
  bool found = false;
};

inline CorollaryReport check_corollary_patterns(const Slope& r) {
  ContinuedFraction cf = to_continued_fraction(r);
  if (cf.terms.size() < 2) throw error("check_corollary_patterns: k >= 2 required");
  CorollaryReport rep;
  rep.m = cf.terms[0];
  rep.m2 = cf.terms[1];
  SlopeDecomposition d = s1_s2_decomposition(r);
  auto block_contains = [](const Seq& hay, const Seq& pat) {
    if (pat.size() > hay.size()) return false;
    for (size_t i = 0; i + pat.size() <= hay.size(); ++i) {
      bool ok = true;
      for (size_t j = 0; j < pat.size() && ok; ++j) ok = hay[i + j] == pat[j];
      if (ok) return true;
    }
    return false;
  };
  if (rep.m2 == 1) {
    rep.pattern = {rep.m + 1, rep.m + 1};
    rep.found = block_contains(d.s1, rep.pattern);
  } else {
    rep.exempt = cf.terms.size() == 2 && rep.m2 == 2;
    rep.pattern = {rep.m, rep.m};
    rep.found = block_contains(d.s2, rep.pattern);
  }
  return rep;
}

}  // namespace heckoid
