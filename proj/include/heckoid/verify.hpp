#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "heckoid/decide.hpp"
#include "heckoid/farey.hpp"
#include "heckoid/presentation.hpp"
#include "heckoid/smallcancel.hpp"

namespace heckoid {

struct SweepReport {
  std::string id;
  long long cases = 0;
  long long failures = 0;
  std::vector<std::string> notes;  // first few failure details
  bool pass() const { return failures == 0 && cases > 0; }
};

namespace detail {
inline int sweep_workers() {
  if (const char* env = std::getenv("HECKOID_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

constexpr size_t kMaxNotes = 12;

/// Runs `body(item)` over the items, sharded across workers; failures are
/// merged in item order so the report is stable regardless of worker count.
template <typename Item>
inline SweepReport sweep(std::string id, const std::vector<Item>& items,
                         const std::function<std::string(const Item&)>& body) {
  SweepReport rep;
  rep.id = std::move(id);
  rep.cases = static_cast<long long>(items.size());
  const int workers = sweep_workers();
  std::vector<std::string> results(items.size());
  if (workers <= 1 || items.size() < 2) {
    for (size_t i = 0; i < items.size(); ++i) results[i] = body(items[i]);
  } else {
    std::atomic<size_t> next{0};
    auto run = [&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= items.size()) return;
        results[i] = body(items[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  for (const auto& res : results) {
    if (res.empty()) continue;
    ++rep.failures;
    if (rep.notes.size() < kMaxNotes) rep.notes.push_back(res);
  }
  return rep;
}

inline std::vector<Rational> slopes_in_unit_interval(long long max_denom,
                                                     bool include_ends) {
  std::vector<Rational> out;
  if (include_ends) {
    out.emplace_back(0, 1);
    out.emplace_back(1, 1);
  }
  for (long long p = 2; p <= max_denom; ++p)
    for (long long q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) out.emplace_back(q, p);
  return out;
}
}  // namespace detail

/// Run lengths and shape of S(r) as the structural statement predicts.
inline SweepReport verify_properties(long long max_denom) {
  auto slopes = detail::slopes_in_unit_interval(max_denom, false);
  return detail::sweep<Rational>(
      "properties", slopes, [](const Rational& r) -> std::string {
        ContinuedFraction cf = to_continued_fraction(r);
        const long long m = cf.terms[0];
        Seq S = slope_s_sequence(r);
        if (cf.terms.size() == 1) {
          if (S != Seq{m, m}) return r.str() + ": S(1/m) != (m,m)";
          return {};
        }
        if (S.front() != m + 1 || S.back() != m)
          return r.str() + ": S(r) must start with m+1 and end with m";
        for (long long e : S)
          if (e != m && e != m + 1) return r.str() + ": S(r) entry outside {m, m+1}";
        const bool no_mm = cf.terms[1] == 1;
        for (size_t i = 0; i + 1 < S.size(); ++i) {
          if (no_mm && S[i] == m && S[i + 1] == m)
            return r.str() + ": consecutive (m,m) despite m2=1";
          if (!no_mm && S[i] == m + 1 && S[i + 1] == m + 1)
            return r.str() + ": consecutive (m+1,m+1) despite m2>=2";
        }
        // t_sequence validates the full run shape internally
        (void)t_sequence(r);
        return {};
      });
}

/// CS(r~) equals CT(r) as cyclic sequences.
inline SweepReport verify_induction1(long long max_denom) {
  auto all = detail::slopes_in_unit_interval(max_denom, false);
  std::vector<Rational> slopes;
  for (const auto& r : all)
    if (to_continued_fraction(r).terms.size() >= 2) slopes.push_back(r);
  return detail::sweep<Rational>(
      "induction1", slopes, [](const Rational& r) -> std::string {
        if (slope_cyclic_s_sequence(reduced_slope(r)) != CyclicSeq(t_sequence(r)))
          return r.str() + ": CS(r~) != CT(r)";
        return {};
      });
}

/// The (S1,S2,S1,S2) split: symmetry, boundary values, each block occurring
/// exactly twice in CS(r).
inline SweepReport verify_sequence(long long max_denom) {
  auto slopes = detail::slopes_in_unit_interval(max_denom, false);
  return detail::sweep<Rational>(
      "sequence", slopes, [](const Rational& r) -> std::string {
        ContinuedFraction cf = to_continued_fraction(r);
        const long long m = cf.terms[0];
        SlopeDecomposition d = s1_s2_decomposition(r);
        if (!seq_symmetric(d.s1) || !seq_symmetric(d.s2))
          return r.str() + ": block not symmetric";
        if (d.s1.empty() != (cf.terms.size() == 1))
          return r.str() + ": S1 emptiness disagrees with k";
        if (!d.s1.empty() && (d.s1.front() != m + 1 || d.s1.back() != m + 1))
          return r.str() + ": S1 boundary not m+1";
        if (d.s2.front() != m || d.s2.back() != m)
          return r.str() + ": S2 boundary not m";
        CyclicSeq cs = slope_cyclic_s_sequence(r);
        if (!d.s1.empty() && count_block_occurrences(cs, d.s1) != 2)
          return r.str() + ": S1 does not occur exactly twice";
        if (count_block_occurrences(cs, d.s2) != 2)
          return r.str() + ": S2 does not occur exactly twice";
        return {};
      });
}

/// The recursion on r~ reproduces the direct split.
inline SweepReport verify_relation(long long max_denom) {
  auto slopes = detail::slopes_in_unit_interval(max_denom, false);
  return detail::sweep<Rational>(
      "relation", slopes, [](const Rational& r) -> std::string {
        SlopeDecomposition direct = s1_s2_decomposition(r);
        SlopeDecomposition rec = s1_s2_via_recursion(r);
        if (direct.s1 != rec.s1 || direct.s2 != rec.s2)
          return r.str() + ": recursion disagrees with direct split";
        return {};
      });
}

/// (m+1,m+1) in S1 when m2 = 1; (m,m) in S2 when m2 >= 2 unless r = [m,2].
inline SweepReport verify_corollary(long long max_denom) {
  auto all = detail::slopes_in_unit_interval(max_denom, false);
  std::vector<Rational> slopes;
  for (const auto& r : all)
    if (to_continued_fraction(r).terms.size() >= 2) slopes.push_back(r);
  return detail::sweep<Rational>(
      "corollary", slopes, [](const Rational& r) -> std::string {
        CorollaryReport rep = check_corollary_patterns(r);
        if (rep.exempt) {
          if (rep.found) return r.str() + ": exempt slope unexpectedly has (m,m)";
          return {};
        }
        if (!rep.found) return r.str() + ": predicted pattern missing";
        return {};
      });
}

struct IntervalSweepParams {
  long long p_min = 2;
  long long p_max = 6;
  std::vector<long long> indices = {2, 3};
  long long max_denom = 100;
};

namespace detail {
struct IntervalCase {
  long long p;
  long long n;
  Rational s;
};

inline std::vector<IntervalCase> interval_cases(const IntervalSweepParams& prm,
                                                const char* which) {
  std::vector<IntervalCase> cases;
  for (long long p = prm.p_min; p <= prm.p_max; ++p) {
    for (long long n : prm.indices) {
      auto ctx = HeckoidContext::make(Rational(1, p), n);
      const auto torus = torus_intervals(p);
      for (const auto& s : slopes_in_unit_interval(prm.max_denom, true)) {
        const bool in_i1n = s < ctx.intervals.a;
        const bool in_i2n = s >= ctx.intervals.b;
        bool want = false;
        std::string_view w(which);
        if (w == "connection") want = in_i1n || in_i2n;
        else if (w == "inside-orbit") want = (torus.in_i1(s) || torus.in_i2(s)) && !s.is_zero();
        else if (w == "outside-orbit") want = in_i1n && !torus.in_i1(s);
        else if (w == "outside-orbit2") want = in_i2n && !torus.in_i2(s);
        if (want) cases.push_back({p, n, s});
      }
    }
  }
  return cases;
}

inline SweepReport interval_lemma_sweep(const std::string& id,
                                        const IntervalSweepParams& prm) {
  auto cases = interval_cases(prm, id.c_str());
  return sweep<IntervalCase>(
      id, cases, [&id](const IntervalCase& c) -> std::string {
        auto ctx = HeckoidContext::make(Rational(1, c.p), c.n);
        auto rep = forbidden_pattern_report(c.s, ctx);
        for (const auto& chk : rep.checks) {
          if (chk.id != id) continue;
          if (!chk.applicable)
            return "p=" + std::to_string(c.p) + " n=" + std::to_string(c.n) + " s=" +
                   c.s.str() + ": case enumerated but hypothesis not satisfied";
          if (chk.violated())
            return "p=" + std::to_string(c.p) + " n=" + std::to_string(c.n) + " s=" +
                   c.s.str() + ": predicate violated";
          return {};
        }
        return "missing check " + id;
      });
}
}  // namespace detail

inline SweepReport verify_connection(const IntervalSweepParams& prm = {}) {
  return detail::interval_lemma_sweep("connection", prm);
}
inline SweepReport verify_inside_orbit(const IntervalSweepParams& prm = {}) {
  return detail::interval_lemma_sweep("inside-orbit", prm);
}
inline SweepReport verify_outside_orbit(const IntervalSweepParams& prm = {}) {
  return detail::interval_lemma_sweep("outside-orbit", prm);
}
inline SweepReport verify_outside_orbit2(const IntervalSweepParams& prm = {}) {
  return detail::interval_lemma_sweep("outside-orbit2", prm);
}

struct CancellationSweepParams {
  long long p_max = 20;
  std::vector<long long> indices = {2, 3, 4};
};

/// C(4n) and T(4) for the symmetrized relator sets.
inline SweepReport verify_small_cancellation(const CancellationSweepParams& prm = {}) {
  struct Case {
    Rational r;
    long long n;
  };
  std::vector<Case> cases;
  for (long long p = 2; p <= prm.p_max; ++p)
    for (long long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (long long n : prm.indices) cases.push_back({Rational(q, p), n});
    }
  return detail::sweep<Case>(
      "small-cancellation", cases, [](const Case& c) -> std::string {
        auto R = symmetrize(make_presentation(c.r, c.n));
        auto D = compute_pieces(R);
        auto cres = verify_C(R, D, 4 * c.n);
        if (!cres.holds)
          return c.r.str() + " n=" + std::to_string(c.n) + ": C(4n) fails";
        if (!verify_T4(R).holds)
          return c.r.str() + " n=" + std::to_string(c.n) + ": T(4) fails";
        return {};
      });
}

/// Structural claims about pieces of u_r inside u_r^n.
inline SweepReport verify_maximal_piece(const CancellationSweepParams& prm = {}) {
  struct Case {
    Rational r;
    long long n;
  };
  std::vector<Case> cases;
  for (long long p = 2; p <= prm.p_max; ++p)
    for (long long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (long long n : prm.indices) cases.push_back({Rational(q, p), n});
    }
  return detail::sweep<Case>(
      "maximal-piece", cases, [](const Case& c) -> std::string {
        auto R = symmetrize(make_presentation(c.r, c.n));
        auto D = compute_pieces(R);
        auto chk = check_maximal_piece_structure(c.r, R, D);
        if (!chk.holds)
          return c.r.str() + " n=" + std::to_string(c.n) + ": " + chk.violations.front();
        return {};
      });
}

struct CrossCheckParams {
  std::vector<long long> torus_p = {2, 3, 4};
  std::vector<long long> indices = {2, 3};
  long long max_denom = 30;
};

/// Word problem against orbit membership: dehn_reduce(u_s) empty iff s lies
/// in the orbit of infinity.
inline SweepReport verify_reformulation_crosscheck(const CrossCheckParams& prm = {}) {
  struct Case {
    long long p;
    long long n;
    Rational s;
  };
  std::vector<Case> cases;
  for (long long p : prm.torus_p)
    for (long long n : prm.indices)
      for (const auto& s : detail::slopes_in_unit_interval(prm.max_denom, true))
        cases.push_back({p, n, s});
  return detail::sweep<Case>(
      "reformulation-crosscheck", cases, [](const Case& c) -> std::string {
        auto ctx = HeckoidContext::make(Rational(1, c.p), c.n);
        auto R = symmetrize(make_presentation(ctx.r, ctx.n));
        bool word_trivial = dehn_reduce(riley_word(c.s).word, R).empty();
        bool orbit_trivial = in_orbit_of_infinity(c.s, ctx);
        if (word_trivial != orbit_trivial)
          return "p=" + std::to_string(c.p) + " n=" + std::to_string(c.n) + " s=" +
                 c.s.str() + ": dehn=" + (word_trivial ? "trivial" : "nontrivial") +
                 " orbit=" + (orbit_trivial ? "trivial" : "nontrivial");
        return {};
      });
}

inline const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids = {
      "properties",    "induction1",     "sequence",
      "relation",      "corollary",      "connection",
      "inside-orbit",  "outside-orbit",  "outside-orbit2",
      "maximal-piece", "small-cancellation", "reformulation-crosscheck"};
  return ids;
}

struct VerifyParams {
  long long max_denom = 200;           // slope sweeps
  IntervalSweepParams interval;        // interval pattern lemmas
  CancellationSweepParams cancel;      // piece sweeps
  CrossCheckParams crosscheck;         // dehn vs orbit
};

inline SweepReport run_verify(const std::string& id, const VerifyParams& prm = {}) {
  if (id == "properties") return verify_properties(prm.max_denom);
  if (id == "induction1") return verify_induction1(prm.max_denom);
  if (id == "sequence") return verify_sequence(prm.max_denom);
  if (id == "relation") return verify_relation(prm.max_denom);
  if (id == "corollary") return verify_corollary(prm.max_denom);
  if (id == "connection") return verify_connection(prm.interval);
  if (id == "inside-orbit") return verify_inside_orbit(prm.interval);
  if (id == "outside-orbit") return verify_outside_orbit(prm.interval);
  if (id == "outside-orbit2") return verify_outside_orbit2(prm.interval);
  if (id == "maximal-piece") return verify_maximal_piece(prm.cancel);
  if (id == "small-cancellation") return verify_small_cancellation(prm.cancel);
  if (id == "reformulation-crosscheck") return verify_reformulation_crosscheck(prm.crosscheck);
  throw error("unknown lemma id: " + id);
}

}  // namespace heckoid
