#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heckoid/farey.hpp"
#include "heckoid/presentation.hpp"

namespace heckoid {

/// All cyclic permutations of u_r^n and of its inverse, deduplicated as words
/// and kept in sorted order for deterministic traversal.
struct SymmetrizedRelatorSet {
  UpperPresentation source;
  std::vector<Word> elements;
  size_t relator_length = 0;

  long long index_of(const Word& w) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), w);
    if (it == elements.end() || !(*it == w)) return -1;
    return it - elements.begin();
  }
};

inline SymmetrizedRelatorSet symmetrize(const UpperPresentation& pres) {
  SymmetrizedRelatorSet R;
  R.source = pres;
  R.relator_length = pres.relator.size();
  std::vector<Word> all;
  Word inv = pres.relator.inverse();
  for (size_t k = 0; k < R.relator_length; ++k) {
    all.push_back(rotate_word(pres.relator, k));
    all.push_back(rotate_word(inv, k));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  R.elements = std::move(all);
  return R;
}

namespace detail {
inline size_t lcp_len(const Word& x, const Word& y) {
  size_t n = std::min(x.size(), y.size());
  size_t i = 0;
  while (i < n && x.letters[i] == y.letters[i]) ++i;
  return i;
}
}  // namespace detail

/// Piece data: for each element, the length of the longest piece that is a
/// prefix of it (a piece being a common prefix of two distinct elements).
/// The full piece set is exactly the set of nonempty prefixes of these
/// maximal prefixes, so everything else is answered from piece_prefix_len.
struct PieceDictionary {
  std::vector<size_t> piece_prefix_len;  // parallel to R.elements
  size_t max_piece_length = 0;

  bool is_piece(const SymmetrizedRelatorSet& R, const Word& x) const {
    if (x.empty() || x.size() > max_piece_length) return false;
    for (size_t e = 0; e < R.elements.size(); ++e) {
      if (piece_prefix_len[e] < x.size()) continue;
      if (std::equal(x.letters.begin(), x.letters.end(), R.elements[e].letters.begin()))
        return true;
    }
    return false;
  }

  /// True iff x occurs as a contiguous subword of some piece.
  bool within_some_piece(const SymmetrizedRelatorSet& R, const Word& x) const {
    if (x.empty()) return true;
    for (size_t e = 0; e < R.elements.size(); ++e) {
      size_t plen = piece_prefix_len[e];
      if (plen < x.size()) continue;
      const auto& host = R.elements[e].letters;
      for (size_t off = 0; off + x.size() <= plen; ++off) {
        if (std::equal(x.letters.begin(), x.letters.end(), host.begin() + off)) return true;
      }
    }
    return false;
  }
};

inline PieceDictionary compute_pieces(const SymmetrizedRelatorSet& R) {
  PieceDictionary D;
  const size_t m = R.elements.size();
  D.piece_prefix_len.assign(m, 0);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      D.piece_prefix_len[i] =
          std::max(D.piece_prefix_len[i], detail::lcp_len(R.elements[i], R.elements[j]));
    }
    D.max_piece_length = std::max(D.max_piece_length, D.piece_prefix_len[i]);
  }
  return D;
}

/// Sentinel for "not expressible as a product of pieces at all".
inline constexpr long long kUnfactorable = -1;

namespace detail {
/// Rotation index lookup: element holding rotate(e, off).
struct RotationTable {
  std::vector<std::vector<long long>> idx;  // [element][offset]

  static RotationTable build(const SymmetrizedRelatorSet& R) {
    RotationTable t;
    const size_t L = R.relator_length;
    t.idx.assign(R.elements.size(), std::vector<long long>(L, -1));
    for (size_t e = 0; e < R.elements.size(); ++e)
      for (size_t off = 0; off < L; ++off)
        t.idx[e][off] = R.index_of(rotate_word(R.elements[e], off));
    return t;
  }
};

/// maxlen[i]: longest piece starting at offset i of `w`, where position i of
/// w corresponds to offset (base+i) of element e (indices modulo L since the
/// elements are cyclic words read linearly).
inline std::vector<size_t> piece_maxlen_along(const SymmetrizedRelatorSet& R,
                                              const PieceDictionary& D,
                                              const RotationTable& rot, size_t e,
                                              size_t base, size_t wlen) {
  const size_t L = R.relator_length;
  std::vector<size_t> maxlen(wlen, 0);
  for (size_t i = 0; i < wlen; ++i) {
    long long shifted = rot.idx[e][(base + i) % L];
    if (shifted < 0) throw internal_error("piece_maxlen_along: rotation missing");
    maxlen[i] = std::min<size_t>(D.piece_prefix_len[shifted], wlen - i);
  }
  return maxlen;
}

/// Minimal number of pieces covering a word with per-position maximal piece
/// lengths `maxlen`; pieces are prefix-closed so reachable sets are intervals.
inline long long min_cover(const std::vector<size_t>& maxlen,
                           std::vector<size_t>* cuts = nullptr) {
  const size_t n = maxlen.size();
  if (n == 0) return 0;
  // reach[i] = i + maxlen[i], prefix-maximized
  std::vector<size_t> best(n + 1, 0);
  for (size_t i = 0; i < n; ++i) best[i] = i + maxlen[i];
  std::vector<size_t> prefix_best(n + 1, 0);
  size_t run = 0;
  for (size_t i = 0; i < n; ++i) {
    run = std::max(run, best[i]);
    prefix_best[i] = run;
  }
  long long t = 0;
  size_t frontier = 0;
  std::vector<size_t> frontiers{0};
  while (frontier < n) {
    size_t next = prefix_best[frontier];
    if (next <= frontier) return kUnfactorable;
    frontier = next;
    frontiers.push_back(frontier);
    ++t;
  }
  if (cuts) {
    // walk backwards; with step-1 pieces every position in [1, f(step-1)] is
    // reachable (plus 0 with zero pieces), so the smallest covering cut works
    cuts->assign(1, n);
    size_t pos = n;
    for (long long step = t; step >= 1; --step) {
      size_t limit = frontiers[static_cast<size_t>(step - 1)];
      size_t chosen = limit;
      size_t lo = step == 1 ? 0 : 1;
      for (size_t i = lo; i <= limit; ++i) {
        if (best[i] >= pos) {
          chosen = i;
          break;
        }
      }
      cuts->push_back(chosen);
      pos = chosen;
    }
    std::reverse(cuts->begin(), cuts->end());
  }
  return t;
}
}  // namespace detail

struct FactorizationWitness {
  size_t element_index = 0;
  std::vector<size_t> cuts;  // piece boundaries, 0 = start, L = end
};

struct ConditionResult {
  bool holds = true;
  long long bound = 0;
  long long min_pieces = kUnfactorable;  // smallest factorization over all elements
  std::optional<FactorizationWitness> witness;
};

/// C(bound): no element of R is a product of fewer than `bound` pieces.
inline ConditionResult verify_C(const SymmetrizedRelatorSet& R, const PieceDictionary& D,
                                long long bound) {
  if (bound < 2) throw error("verify_C: bound must be >= 2");
  ConditionResult res;
  res.bound = bound;
  auto rot = detail::RotationTable::build(R);
  for (size_t e = 0; e < R.elements.size(); ++e) {
    auto maxlen =
        detail::piece_maxlen_along(R, D, rot, e, 0, R.elements[e].size());
    std::vector<size_t> cuts;
    long long t = detail::min_cover(maxlen, &cuts);
    if (t == kUnfactorable) continue;
    if (res.min_pieces == kUnfactorable || t < res.min_pieces) res.min_pieces = t;
    if (t < bound) {
      res.holds = false;
      res.witness = FactorizationWitness{e, cuts};
      return res;
    }
  }
  return res;
}

struct T4Witness {
  std::array<size_t, 3> elements{};
};

struct T4Result {
  bool holds = true;
  std::optional<T4Witness> witness;
};

/// T(4): for any w1,w2,w3 in R with no successive inverse pair (indices mod
/// 3), at least one of w1w2, w2w3, w3w1 is freely reduced without
/// cancellation. The condition quantifies over 3 <= t < q, so triples are
/// the only case here.
inline T4Result verify_T4(const SymmetrizedRelatorSet& R) {
  T4Result res;
  const size_t m = R.elements.size();
  if (m == 0) return res;
  std::vector<Letter> first(m), last(m);
  std::vector<long long> inv_idx(m);
  for (size_t i = 0; i < m; ++i) {
    first[i] = R.elements[i].letters.front();
    last[i] = R.elements[i].letters.back();
    inv_idx[i] = R.index_of(R.elements[i].inverse());
  }
  auto cancels = [&](size_t x, size_t y) { return last[x] == first[y].inv(); };
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      if (!cancels(i, j) || static_cast<long long>(j) == inv_idx[i]) continue;
      for (size_t k = 0; k < m; ++k) {
        if (static_cast<long long>(k) == inv_idx[j]) continue;
        if (static_cast<long long>(i) == inv_idx[k]) continue;
        if (cancels(j, k) && cancels(k, i)) {
          res.holds = false;
          res.witness = T4Witness{{i, j, k}};
          return res;
        }
      }
    }
  }
  return res;
}

/// Minimal t such that w is a product of t pieces of R. w must occur as a
/// subword of the cyclic word of some element; kUnfactorable marks words with
/// a position no piece covers (impossible for genuine subwords).
inline long long min_piece_count(const Word& w, const SymmetrizedRelatorSet& R,
                                 const PieceDictionary& D) {
  if (w.empty()) return 0;
  const size_t L = R.relator_length;
  if (w.size() > L) throw error("min_piece_count: word longer than the relator");
  // locate w in the doubled elements
  for (size_t e = 0; e < R.elements.size(); ++e) {
    const auto& host = R.elements[e].letters;
    for (size_t off = 0; off < L; ++off) {
      bool match = true;
      for (size_t i = 0; i < w.size() && match; ++i)
        match = host[(off + i) % L] == w.letters[i];
      if (!match) continue;
      auto rot = detail::RotationTable::build(R);
      auto maxlen = detail::piece_maxlen_along(R, D, rot, e, off, w.size());
      return detail::min_cover(maxlen);
    }
  }
  throw error("min_piece_count: word is not a subword of any relator element");
}

// ---------------------------------------------------------------------------
// Dehn reduction
// ---------------------------------------------------------------------------

struct DehnStep {
  size_t position = 0;       // offset in the current core where the match began
  size_t rotation = 0;       // letters rotated into the conjugator before the step
  long long element = -1;    // index of the relator element matched
  size_t matched_len = 0;    // length of the replaced subword (> L/2)
  std::string replacement;   // the inserted shorter complement
  std::string core_before;   // core just before the replacement, for replay
};

struct DehnTrace {
  std::vector<DehnStep> steps;
};

namespace detail {
struct DehnMatch {
  size_t pos = 0;
  size_t len = 0;
  long long element = -1;
};

/// Leftmost-longest subword of `w` that is a prefix of some relator element
/// and strictly longer than half the relator; deterministic tie-break by
/// element order.
inline std::optional<DehnMatch> find_dehn_match(const Word& w,
                                                const SymmetrizedRelatorSet& R) {
  const size_t half = R.relator_length / 2;  // need len > half (strict majority)
  std::optional<DehnMatch> best;
  for (size_t pos = 0; pos + half + 1 <= w.size(); ++pos) {
    DehnMatch local;
    for (size_t e = 0; e < R.elements.size(); ++e) {
      const auto& host = R.elements[e].letters;
      size_t len = 0;
      size_t cap = std::min(w.size() - pos, host.size());
      while (len < cap && w.letters[pos + len] == host[len]) ++len;
      if (2 * len > R.relator_length && len > local.len) {
        local.pos = pos;
        local.len = len;
        local.element = static_cast<long long>(e);
      }
    }
    if (local.element >= 0) {
      best = local;
      break;  // leftmost wins
    }
  }
  return best;
}
}  // namespace detail

/// Dehn's algorithm: repeatedly replace a strict relator-majority subword by
/// the inverse of its complement, then reduce. Cyclic wrap-arounds are
/// handled by rotating into a tracked conjugator, so the returned word equals
/// the input in the quotient group. Empty output == trivial element, given
/// the small-cancellation bounds this presentation satisfies.
inline Word dehn_reduce(const Word& input, const SymmetrizedRelatorSet& R,
                        DehnTrace* trace = nullptr) {
  Word conj;  // result = conj * core * conj^{-1}
  Word core = free_reduce(input.letters);
  while (true) {
    // cyclic-reduce into the conjugator
    Word trimmed;
    Word inner = cyclic_reduce(core, &trimmed);
    if (!trimmed.empty()) conj = concat_reduced(conj, trimmed);
    core = std::move(inner);
    if (core.empty()) break;

    auto match = detail::find_dehn_match(core, R);
    size_t rotation = 0;
    if (!match && core.size() * 2 > R.relator_length) {
      // look for a match that wraps around the cyclic word
      for (size_t rotk = 1; rotk < core.size() && !match; ++rotk) {
        Word rotated = rotate_word(core, rotk);
        match = detail::find_dehn_match(rotated, R);
        if (match) {
          Word head;
          head.letters.assign(core.letters.begin(), core.letters.begin() + rotk);
          conj = concat_reduced(conj, head);
          core = std::move(rotated);
          rotation = rotk;
        }
      }
    }
    if (!match) break;

    const Word& element = R.elements[match->element];
    Word complement;
    complement.letters.assign(element.letters.begin() + match->len, element.letters.end());
    Word repl = complement.inverse();
    if (trace)
      trace->steps.push_back(DehnStep{match->pos, rotation, match->element, match->len,
                                      repl.str(), core.str()});
    std::vector<Letter> next;
    next.reserve(core.size());
    next.insert(next.end(), core.letters.begin(), core.letters.begin() + match->pos);
    next.insert(next.end(), repl.letters.begin(), repl.letters.end());
    next.insert(next.end(), core.letters.begin() + match->pos + match->len,
                core.letters.end());
    core = free_reduce(next);
  }
  return concat_reduced(concat_reduced(conj, core), conj.inverse());
}

enum class SearchStatus { found, no_witness_within_bound, budget_exhausted };

struct ConjugacySearchResult {
  SearchStatus status = SearchStatus::no_witness_within_bound;
  std::optional<Word> conjugator;
  long long dehn_calls = 0;
};

/// Length-lexicographic search for g with g u g^{-1} = v in the quotient,
/// certified through dehn_reduce. Absence of a witness proves nothing.
inline ConjugacySearchResult bounded_conjugacy_search(const Word& u, const Word& v,
                                                      const SymmetrizedRelatorSet& R,
                                                      size_t max_conjugator_len,
                                                      long long work_budget = 2000000) {
  ConjugacySearchResult res;
  Word v_inv = v.inverse();
  std::vector<Word> layer{Word{}};
  for (size_t len = 0; len <= max_conjugator_len; ++len) {
    for (const Word& g : layer) {
      if (++res.dehn_calls > work_budget) {
        res.status = SearchStatus::budget_exhausted;
        return res;
      }
      Word candidate = concat_reduced(conjugate_word(g, u), v_inv);
      if (dehn_reduce(candidate, R).empty()) {
        res.status = SearchStatus::found;
        res.conjugator = g;
        return res;
      }
    }
    // extend to the next layer of freely reduced words
    std::vector<Word> next;
    next.reserve(layer.size() * 3 + 1);
    for (const Word& g : layer) {
      for (uint8_t c = 0; c < 4; ++c) {
        Letter l{c};
        if (!g.letters.empty() && g.letters.back() == l.inv()) continue;
        Word h = g;
        h.letters.push_back(l);
        next.push_back(std::move(h));
      }
    }
    layer = std::move(next);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Interval-driven pattern predicates for torus-link contexts (r = 1/p)
// ---------------------------------------------------------------------------

struct LemmaCheck {
  std::string id;
  bool applicable = false;  // hypothesis satisfied by s
  bool predicate = true;    // conclusion evaluated on CS(s)
  bool violated() const { return applicable && !predicate; }
};

struct ForbiddenPatternReport {
  Rational s;
  bool degenerate = false;  // s = 0: CS(u_0) handled as <2> behind this flag
  std::vector<LemmaCheck> checks;
  bool any_violation() const {
    for (const auto& c : checks)
      if (c.violated()) return true;
    return false;
  }
};

/// Evaluates the four interval lemmas (connection, inside-orbit,
/// outside-orbit, outside-orbit2) on CS(s) for a torus-link context.
inline ForbiddenPatternReport forbidden_pattern_report(const Rational& s,
                                                       const HeckoidContext& ctx) {
  if (!ctx.r.num().is_one())
    throw error("forbidden_pattern_report: context slope must be 1/p");
  if (s.is_infinite() || s < Rational(0) || s > Rational(1))
    throw error("forbidden_pattern_report: s must lie in [0,1]");
  const long long p = ctx.r.den().to_int64();
  const long long n = ctx.n;

  ForbiddenPatternReport rep;
  rep.s = s;
  CyclicSeq cs;
  if (s == Rational(0)) {
    rep.degenerate = true;
    cs = CyclicSeq(Seq{2});
  } else {
    cs = slope_cyclic_s_sequence(s);
  }

  const auto torus = torus_intervals(p);
  const bool in_i1n = s >= Rational(0) && s < ctx.intervals.a;
  const bool in_i2n = s >= ctx.intervals.b && s <= Rational(1);
  const bool in_i1 = torus.in_i1(s);
  const bool in_i2 = torus.in_i2(s);

  {
    LemmaCheck c{"connection", in_i1n || in_i2n, true};
    if (c.applicable) {
      Seq pat(static_cast<size_t>(2 * n - 2), p);
      c.predicate = !contains_subsequence(cs, pat);
    }
    rep.checks.push_back(std::move(c));
  }
  {
    LemmaCheck c{"inside-orbit", (in_i1 || in_i2) && s != Rational(0), true};
    if (c.applicable) {
      c.predicate = true;
      for (long long term : cs.vals) c.predicate = c.predicate && term < p;
    }
    rep.checks.push_back(std::move(c));
  }
  {
    LemmaCheck c{"outside-orbit", in_i1n && !in_i1, true};
    if (c.applicable) {
      long long max_term = 0;
      for (long long term : cs.vals) max_term = std::max(max_term, term);
      bool found = false;
      for (long long cc = 1; cc <= max_term - p && !found; ++cc) {
        for (long long cc2 = 1; cc2 <= max_term - p && !found; ++cc2) {
          for (long long d = 0; d <= 2 * n - 4 && !found; ++d) {
            Seq pat;
            pat.push_back(p + cc);
            for (long long i = 0; i < d; ++i) pat.push_back(p);
            pat.push_back(p + cc2);
            found = contains_subsequence(cs, pat);
          }
        }
      }
      c.predicate = found;
    }
    rep.checks.push_back(std::move(c));
  }
  {
    LemmaCheck c{"outside-orbit2", in_i2n && !in_i2, true};
    if (c.applicable) {
      c.predicate = contains_subsequence(cs, Seq{p - 1, p, p - 1}) &&
                    !contains_subsequence(cs, Seq{p, p});
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Structural checks of the piece lemma against a computed dictionary
// ---------------------------------------------------------------------------

struct MaximalPieceCheck {
  bool holds = true;
  std::vector<std::string> violations;
};

/// Verifies the block-level piece claims for u_r against the pieces of the
/// symmetrized set of u_r^n: which v_i blocks pieces may or may not contain
/// or straddle, and which boundary segments must be pieces.
inline MaximalPieceCheck check_maximal_piece_structure(const Rational& r,
                                                       const SymmetrizedRelatorSet& R,
                                                       const PieceDictionary& D) {
  MaximalPieceCheck out;
  auto fail = [&](const std::string& msg) {
    out.holds = false;
    out.violations.push_back(msg);
  };
  Word u = riley_word(r).word;
  SlopeDecomposition d = s1_s2_decomposition(r);
  long long len1 = 0, len2 = 0;
  for (long long e : d.s1) len1 += e;
  for (long long e : d.s2) len2 += e;
  auto segment = [&](size_t from, size_t count) {
    Word w;
    w.letters.assign(u.letters.begin() + from, u.letters.begin() + from + count);
    return w;
  };
  const size_t l1 = static_cast<size_t>(len1), l2 = static_cast<size_t>(len2);
  Word v1 = segment(0, l1);
  Word v2 = segment(l1, l2);
  Word v3 = segment(l1 + l2, l1);
  Word v4 = segment(2 * l1 + l2, l2);

  auto prefix = [](const Word& w, size_t k) {
    Word r2;
    r2.letters.assign(w.letters.begin(), w.letters.begin() + k);
    return r2;
  };
  auto suffix = [](const Word& w, size_t k) {
    Word r2;
    r2.letters.assign(w.letters.end() - k, w.letters.end());
    return r2;
  };
  auto glue2 = [](Word x, const Word& y) {
    x.letters.insert(x.letters.end(), y.letters.begin(), y.letters.end());
    return x;
  };
  auto glue3 = [&](Word x, const Word& y, const Word& z) {
    return glue2(glue2(std::move(x), y), z);
  };

  const bool single_term = v1.empty();  // k = 1
  if (single_term) {
    if (D.within_some_piece(R, v2)) fail("piece contains v2");
    if (D.within_some_piece(R, v4)) fail("piece contains v4");
    for (size_t i = 1; i <= v2.size(); ++i)
      for (size_t j = 1; j <= v4.size(); ++j)
        if (D.is_piece(R, glue2(suffix(v2, i), prefix(v4, j))))
          fail("piece of shape v2e*v4b");
    for (size_t i = 1; i <= v4.size(); ++i)
      for (size_t j = 1; j <= v2.size(); ++j)
        if (D.is_piece(R, glue2(suffix(v4, i), prefix(v2, j))))
          fail("piece of shape v4e*v2b");
    for (size_t i = 1; i + 1 <= v2.size(); ++i) {
      if (!D.is_piece(R, prefix(v2, i))) fail("v2 prefix not a piece");
      if (!D.is_piece(R, suffix(v2, i))) fail("v2 suffix not a piece");
    }
    for (size_t i = 1; i + 1 <= v4.size(); ++i) {
      if (!D.is_piece(R, prefix(v4, i))) fail("v4 prefix not a piece");
      if (!D.is_piece(R, suffix(v4, i))) fail("v4 suffix not a piece");
    }
  } else {
    if (D.within_some_piece(R, v1)) fail("piece contains v1");
    if (D.within_some_piece(R, v3)) fail("piece contains v3");
    for (size_t i = 1; i <= v1.size(); ++i)
      for (size_t j = 1; j <= v3.size(); ++j)
        if (D.is_piece(R, glue3(suffix(v1, i), v2, prefix(v3, j))))
          fail("piece of shape v1e*v2*v3b");
    for (size_t i = 1; i <= v3.size(); ++i)
      for (size_t j = 1; j <= v1.size(); ++j)
        if (D.is_piece(R, glue3(suffix(v3, i), v4, prefix(v1, j))))
          fail("piece of shape v3e*v4*v1b");
    for (size_t i = 1; i + 1 <= v1.size(); ++i) {
      if (!D.is_piece(R, glue2(suffix(v1, i), v2))) fail("v1e*v2 not a piece");
      if (!D.is_piece(R, glue2(v4, prefix(v1, i)))) fail("v4*v1b not a piece");
    }
    for (size_t i = 1; i + 1 <= v3.size(); ++i) {
      if (!D.is_piece(R, glue2(v2, prefix(v3, i)))) fail("v2*v3b not a piece");
      if (!D.is_piece(R, glue2(suffix(v3, i), v4))) fail("v3e*v4 not a piece");
    }
  }
  return out;
}

}  // namespace heckoid
