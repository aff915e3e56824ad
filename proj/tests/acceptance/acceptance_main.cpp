// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Shard-heavy sweeps honor HECKOID_WORKERS.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "heckoid/heckoid.hpp"

#include "../support/orbit_bfs.hpp"

using namespace heckoid;

namespace {

struct Criterion {
  std::string name;
  std::function<std::string()> body;  // empty string = pass, else failure detail
};

std::string check(bool ok, const std::string& detail) { return ok ? "" : detail; }

// --- 1. golden values ------------------------------------------------------

std::string golden_values() {
  std::ostringstream bad;
  auto expect_seq = [&](const char* label, const Seq& got, const Seq& want) {
    if (got != want) bad << label << " got " << seq_str(got) << "; ";
  };
  expect_seq("S(10/37)", slope_s_sequence(Rational(10, 37)),
             Seq{4, 4, 4, 3, 4, 4, 3, 4, 4, 3, 4, 4, 4, 3, 4, 4, 3, 4, 4, 3});
  expect_seq("T(10/37)", t_sequence(Rational(10, 37)), Seq{3, 2, 2, 3, 2, 2});
  expect_seq("S(8/35)", slope_s_sequence(Rational(8, 35)),
             Seq{5, 4, 5, 4, 4, 5, 4, 4, 5, 4, 5, 4, 4, 5, 4, 4});
  expect_seq("T(8/35)", t_sequence(Rational(8, 35)), Seq{1, 2, 2, 1, 2, 2});

  auto d1 = s1_s2_decomposition(Rational(10, 37));
  expect_seq("S1(10/37)", d1.s1, Seq{4, 4, 4});
  expect_seq("S2(10/37)", d1.s2, Seq{3, 4, 4, 3, 4, 4, 3});
  auto d2 = s1_s2_decomposition(Rational(8, 35));
  expect_seq("S1(8/35)", d2.s1, Seq{5, 4, 5});
  expect_seq("S2(8/35)", d2.s2, Seq{4, 4, 5, 4, 4});

  if (riley_word(Rational(0, 1)).word.str() != "ab") bad << "u_0 != ab; ";
  if (riley_word(Rational(1, 1)).word.str() != "aB") bad << "u_1 != aB; ";
  if (to_continued_fraction(Rational(2, 9)).terms != std::vector<long long>{4, 2})
    bad << "cf(2/9) != [4,2]; ";
  if (to_continued_fraction(Rational(3, 10)).terms != std::vector<long long>{3, 3})
    bad << "cf(3/10) != [3,3]; ";

  auto iv = fundamental_intervals(Rational(3, 10), 2);
  if (iv.a != Rational(5, 17) || iv.b != Rational(7, 23))
    bad << "intervals(3/10;2) got [0," << iv.a.str() << "] u [" << iv.b.str() << ",1]; ";
  return bad.str();
}

// --- 2. lemma sweep to p <= 200 -------------------------------------------

std::string lemma_sweep() {
  std::ostringstream bad;
  for (const char* id : {"properties", "induction1", "sequence", "relation", "corollary"}) {
    VerifyParams prm;
    prm.max_denom = 200;
    SweepReport rep = run_verify(id, prm);
    if (!rep.pass()) {
      bad << id << ": " << rep.failures << "/" << rep.cases << " failed";
      if (!rep.notes.empty()) bad << " (" << rep.notes.front() << ")";
      bad << "; ";
    }
  }
  return bad.str();
}

// --- 3. small cancellation p <= 20, n in {2,3,4} ---------------------------

std::string small_cancellation() {
  CancellationSweepParams prm;
  prm.p_max = 20;
  prm.indices = {2, 3, 4};
  SweepReport c = verify_small_cancellation(prm);
  SweepReport m = verify_maximal_piece(prm);
  std::ostringstream bad;
  if (!c.pass())
    bad << "C/T: " << c.failures << "/" << c.cases
        << (c.notes.empty() ? "" : " " + c.notes.front()) << "; ";
  if (!m.pass())
    bad << "maximal-piece: " << m.failures << "/" << m.cases
        << (m.notes.empty() ? "" : " " + m.notes.front()) << "; ";
  return bad.str();
}

// --- 4. interval pattern lemmas ---------------------------------------------

std::string interval_pattern_lemmas() {
  IntervalSweepParams prm;
  prm.p_min = 2;
  prm.p_max = 6;
  prm.indices = {2, 3};
  prm.max_denom = 100;
  std::ostringstream bad;
  for (const char* id : {"connection", "inside-orbit", "outside-orbit", "outside-orbit2"}) {
    VerifyParams vp;
    vp.interval = prm;
    SweepReport rep = run_verify(id, vp);
    if (!rep.pass()) {
      bad << id << ": " << rep.failures << "/" << rep.cases;
      if (!rep.notes.empty()) bad << " (" << rep.notes.front() << ")";
      bad << "; ";
    }
  }
  return bad.str();
}

// --- 5. triviality cross-validation ----------------------------------------

std::string triviality_crosscheck() {
  CrossCheckParams prm;
  prm.torus_p = {2, 3, 4};
  prm.indices = {2, 3};
  prm.max_denom = 30;
  SweepReport rep = verify_reformulation_crosscheck(prm);
  if (!rep.pass()) {
    std::ostringstream bad;
    bad << rep.failures << "/" << rep.cases << " disagreements";
    if (!rep.notes.empty()) bad << " (" << rep.notes.front() << ")";
    return bad.str();
  }
  return "";
}

// --- 6. orbit machinery -----------------------------------------------------

std::string orbit_machinery() {
  std::ostringstream bad;
  const std::vector<std::pair<Rational, long long>> configs = {
      {Rational(1, 2), 2}, {Rational(1, 3), 2}, {Rational(3, 10), 2}, {Rational(2, 5), 3}};
  std::mt19937_64 rng(20260808);
  for (const auto& [r, n] : configs) {
    auto ctx = HeckoidContext::make(r, n);
    std::vector<FareyAutomorphism> gens = {gamma_infinity_generator(0),
                                           gamma_infinity_generator(1), ctx.parabolic,
                                           ctx.parabolic.inverse()};
    long long failures = 0;
    for (int i = 0; i < 10000; ++i) {
      long long den = 1 + static_cast<long long>(rng() % 1000000ULL);
      long long num = static_cast<long long>(rng() % 2000001ULL) - 1000000;
      Rational s(num, den);
      auto res = normalize(s, ctx);
      if (apply_witness(s, res.witness) != res.s0) ++failures;
      auto idem = normalize(res.s0, ctx);
      if (idem.s0 != res.s0 || !idem.witness.empty()) ++failures;
      Rational moved = s;
      int len = 1 + static_cast<int>(rng() % 5);
      for (int k = 0; k < len; ++k) moved = gens[rng() % 4].apply(moved);
      if (normalize(moved, ctx).s0 != res.s0) ++failures;
    }
    if (failures)
      bad << r.str() << " n=" << n << ": " << failures << " trial failures; ";

    // independent BFS oracle on every slope with denominator <= 20
    long long bfs_bad = 0;
    for (long long p = 1; p <= 20; ++p) {
      for (long long q = 0; q <= p; ++q) {
        if (std::gcd(q, p) != 1) continue;
        Rational s(q, p);
        auto fast = normalize(s, ctx);
        auto slow = testing::orbit_bfs(s, ctx);
        if (!slow.fundamental || *slow.fundamental != fast.s0) ++bfs_bad;
      }
    }
    if (bfs_bad) bad << r.str() << " n=" << n << ": " << bfs_bad << " BFS mismatches; ";
  }
  return bad.str();
}

// --- 7. trace certificates at desk scale ------------------------------------

std::string trace_certificates() {
  std::ostringstream bad;
  for (long long p : {2, 3}) {
    for (long long n : {2, 3}) {
      auto ctx = HeckoidContext::make(Rational(1, p), n);
      auto reps = solve_representations(Rational(1, p), n);
      for (const auto& rep : reps) {
        if (rep.residual >= 1e-8 || rep.power_residual >= 1e-8) {
          bad << "p=" << p << " n=" << n << ": residual too large; ";
          return bad.str();
        }
      }
      std::vector<Rational> in_I;
      for (long long den = 1; den <= 12; ++den)
        for (long long num = 0; num <= den; ++num) {
          if (std::gcd(num, den) != 1) continue;
          Rational s(num, den);
          if (ctx.intervals.in_fundamental(s)) in_I.push_back(s);
        }

      long long pairs = 0, conj_wrong = 0, certs = 0;
      DecideOptions fast;
      fast.attach_certificates = false;
      fast.classify.dehn_max_denominator = 0;
      for (size_t i = 0; i < in_I.size(); ++i) {
        for (size_t j = i + 1; j < in_I.size(); ++j) {
          ++pairs;
          if (decide_conjugate(in_I[i], in_I[j], ctx, fast).conjugate) ++conj_wrong;
          auto cert = certify_non_conjugate(in_I[i], in_I[j], reps, 1e-8);
          if (cert && cert->margin > 1e-6) ++certs;
        }
      }
      if (conj_wrong)
        bad << "p=" << p << " n=" << n << ": " << conj_wrong
            << " fundamental pairs decided conjugate; ";
      if (certs * 100 < pairs * 95)
        bad << "p=" << p << " n=" << n << ": non-conjugacy certificates " << certs << "/"
            << pairs << " < 95%; ";

      long long np = 0, nt = 0;
      for (const auto& s : in_I) {
        auto cp = certify_non_peripheral(s, reps, 1e-8);
        if (cp && cp->margin > 1e-6) ++np;
        auto ct = certify_non_torsion(s, reps, 1e-8);
        if (ct && ct->margin > 1e-6) ++nt;
      }
      long long count = static_cast<long long>(in_I.size());
      if (np * 100 < count * 95)
        bad << "p=" << p << " n=" << n << ": non-peripheral " << np << "/" << count
            << " < 95%; ";
      if (nt * 100 < count * 95)
        bad << "p=" << p << " n=" << n << ": non-torsion " << nt << "/" << count
            << " < 95%; ";
    }
  }
  return bad.str();
}

// --- 8. numeric anchors ------------------------------------------------------

std::string numeric_anchors() {
  std::ostringstream bad;
  IntPoly t12 = trace_polynomial(Rational(1, 2));
  IntPoly want;
  want.coeffs = {BigInt(2), BigInt(0), BigInt(1)};
  if (!(t12 == want)) bad << "tr rho(u_{1/2}) != w^2 + 2; ";
  auto reps = solve_representations(Rational(1, 2), 2);
  if (reps.size() != 2) bad << "(1/2, 2) root count != 2; ";
  for (const auto& rep : reps) {
    double err = std::abs(std::abs(rep.omega.imag()) - std::sqrt(2.0)) +
                 std::abs(rep.omega.real());
    if (err > 1e-10) bad << "root not within 1e-10 of +-i sqrt(2); ";
  }
  return bad.str();
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"golden-values", golden_values},
      {"lemma-sweep-p200", lemma_sweep},
      {"small-cancellation-p20", small_cancellation},
      {"interval-pattern-lemmas", interval_pattern_lemmas},
      {"triviality-crosscheck", triviality_crosscheck},
      {"orbit-machinery", orbit_machinery},
      {"trace-certificates", trace_certificates},
      {"numeric-anchors", numeric_anchors},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.body();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    long long dt = static_cast<long long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0)
            .count());
    if (detail.empty()) {
      std::printf("[PASS] %-28s (%lld.%03llds)\n", c.name.c_str(), dt / 1000, dt % 1000);
    } else {
      ++failures;
      std::printf("[FAIL] %-28s (%lld.%03llds) %s\n", c.name.c_str(), dt / 1000,
                  dt % 1000, detail.c_str());
    }
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
