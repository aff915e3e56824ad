#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heckoid/farey.hpp"
#include "heckoid/kleinian.hpp"
#include "heckoid/smallcancel.hpp"

namespace heckoid {

enum class LoopKind { trivial, torsion_core, regular };

inline const char* to_string(LoopKind k) {
  switch (k) {
    case LoopKind::trivial: return "trivial";
    case LoopKind::torsion_core: return "torsion-core";
    case LoopKind::regular: return "regular";
  }
  return "?";
}

/// Whether the statement backing an answer is proved in the torus-link case
/// handled here (r = +-1/p mod 1) or deferred to the general case.
enum class ProvenScope { torus_link, general_case };

inline const char* to_string(ProvenScope s) {
  return s == ProvenScope::torus_link ? "torus-link" : "general-case";
}

inline ProvenScope proven_scope_for(const Rational& r) {
  auto canon = canonicalize_slope(r);
  if (!canon.is_infinite && !canon.is_integral && canon.value.num().is_one())
    return ProvenScope::torus_link;
  return ProvenScope::general_case;
}

struct LoopClass {
  Rational input;
  Rational normalized;
  LoopKind kind = LoopKind::regular;
  NormalizeResult norm;
  // Dehn cross-check on u_s, attached for torus-link contexts when the
  // denominator is within budget: records whether the word-problem answer
  // matches the orbit answer.
  std::optional<bool> dehn_trivial;
  std::optional<bool> dehn_agrees;
};

struct ClassifyOptions {
  long long normalize_budget = 1000000;
  long long dehn_max_denominator = 30;  // cross-check budget; 0 disables
};

inline LoopClass classify(const Rational& s, const HeckoidContext& ctx,
                          const ClassifyOptions& opts = {}) {
  LoopClass out;
  out.input = s;
  out.norm = normalize(s, ctx, opts.normalize_budget);
  out.normalized = out.norm.s0;
  if (out.normalized.is_infinite())
    out.kind = LoopKind::trivial;
  else if (out.normalized == ctx.r)
    out.kind = LoopKind::torsion_core;
  else
    out.kind = LoopKind::regular;

  if (opts.dehn_max_denominator > 0 && ctx.r.num().is_one() && !s.is_infinite() &&
      s >= Rational(0) && s <= Rational(1) &&
      s.den() <= BigInt(opts.dehn_max_denominator)) {
    auto R = symmetrize(make_presentation(ctx.r, ctx.n));
    bool trivial = dehn_reduce(riley_word(s).word, R).empty();
    out.dehn_trivial = trivial;
    out.dehn_agrees = trivial == (out.kind == LoopKind::trivial);
  }
  return out;
}

struct DecideOptions {
  ClassifyOptions classify;
  bool attach_certificates = true;
  double tol = 1e-8;
  size_t conjugator_search_len = 4;  // 0 disables the search for a witness
  long long max_context_denominator_for_reps = 64;
};

struct ConjugacyVerdict {
  bool conjugate = false;
  LoopClass left, right;
  ProvenScope scope = ProvenScope::general_case;
  std::optional<TraceCertificate> non_conjugacy_certificate;  // only when false
  std::optional<Word> conjugator_witness;                     // only when true
  bool certificates_attempted = false;
};

namespace detail {
inline std::vector<ParabolicRepresentation> reps_for(const HeckoidContext& ctx,
                                                     const DecideOptions& opts) {
  if (!opts.attach_certificates) return {};
  if (ctx.r.den() > BigInt(opts.max_context_denominator_for_reps)) return {};
  return solve_representations(ctx.r, ctx.n);
}
}  // namespace detail

/// Decides homotopy of alpha_s and alpha_s' in the quotient: true exactly
/// when the normalized slopes agree. Certificates are corroborating evidence,
/// never the decision path.
inline ConjugacyVerdict decide_conjugate(const Rational& s, const Rational& s_prime,
                                         const HeckoidContext& ctx,
                                         const DecideOptions& opts = {}) {
  ConjugacyVerdict v;
  v.left = classify(s, ctx, opts.classify);
  v.right = classify(s_prime, ctx, opts.classify);
  v.scope = proven_scope_for(ctx.r);
  v.conjugate = v.left.normalized == v.right.normalized;
  if (opts.attach_certificates) {
    v.certificates_attempted = true;
    if (!v.conjugate) {
      // alpha_s is conjugate to alpha_{normalized}, so separating the
      // normalized slopes refutes conjugacy of the inputs themselves
      auto reps = detail::reps_for(ctx, opts);
      if (!reps.empty()) {
        v.non_conjugacy_certificate =
            certify_non_conjugate(v.left.normalized, v.right.normalized, reps, opts.tol);
      }
    } else if (opts.conjugator_search_len > 0 && !s.is_infinite() &&
               !s_prime.is_infinite() && s >= Rational(0) && s <= Rational(1) &&
               s_prime >= Rational(0) && s_prime <= Rational(1)) {
      Word u = riley_word(s).word;
      Word w = riley_word(s_prime).word;
      if (!u.empty() && !w.empty()) {
        auto R = symmetrize(make_presentation(ctx.r, ctx.n));
        auto found = bounded_conjugacy_search(u, w, R, opts.conjugator_search_len);
        if (found.status == SearchStatus::found) v.conjugator_witness = found.conjugator;
      }
    }
  }
  return v;
}

enum class PeripheralAnswer { no, not_applicable };

struct PeripheralVerdict {
  PeripheralAnswer value = PeripheralAnswer::no;
  LoopClass cls;
  ProvenScope scope = ProvenScope::general_case;
  std::optional<TraceCertificate> certificate;
};

/// No essential simple loop with slope in the fundamental set is peripheral;
/// the trivial class has no meaningful peripherality and reports
/// not-applicable rather than a boolean.
inline PeripheralVerdict decide_peripheral(const Rational& s, const HeckoidContext& ctx,
                                           const DecideOptions& opts = {}) {
  PeripheralVerdict v;
  v.cls = classify(s, ctx, opts.classify);
  v.scope = proven_scope_for(ctx.r);
  if (v.cls.kind == LoopKind::trivial) {
    v.value = PeripheralAnswer::not_applicable;
    return v;
  }
  v.value = PeripheralAnswer::no;
  if (opts.attach_certificates && v.cls.kind == LoopKind::regular) {
    auto reps = detail::reps_for(ctx, opts);
    if (!reps.empty())
      v.certificate = certify_non_peripheral(v.cls.normalized, reps, opts.tol);
  }
  return v;
}

struct TorsionVerdict {
  bool torsion = false;
  LoopClass cls;
  ProvenScope scope = ProvenScope::general_case;
  std::optional<TraceCertificate> certificate;  // non-torsion evidence when false
};

/// alpha_s is torsion exactly when it normalizes onto the core slope r.
inline TorsionVerdict decide_torsion(const Rational& s, const HeckoidContext& ctx,
                                     const DecideOptions& opts = {}) {
  TorsionVerdict v;
  v.cls = classify(s, ctx, opts.classify);
  v.scope = proven_scope_for(ctx.r);
  v.torsion = v.cls.kind == LoopKind::torsion_core;
  if (opts.attach_certificates && v.cls.kind == LoopKind::regular) {
    auto reps = detail::reps_for(ctx, opts);
    if (!reps.empty())
      v.certificate = certify_non_torsion(v.cls.normalized, reps, opts.tol);
  }
  return v;
}

}  // namespace heckoid
