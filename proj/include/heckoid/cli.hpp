#pragma once

#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "heckoid/json_io.hpp"

namespace heckoid {

/// A parsed command invocation; the front end maps argv onto this and run()
/// produces deterministic output for it.
struct CommandRequest {
  std::string command;
  std::optional<Rational> r;             // context slope, when the command has one
  std::optional<Rational> index;         // context index n (rational: 3/2 allowed by `intervals`)
  std::vector<Rational> slopes;          // free slope arguments
  std::map<std::string, std::string> options;
  bool table = false;
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "word",   "sseq",      "decomp",     "tseq",    "intervals",
      "normalize", "trivial", "conjugate", "peripheral", "torsion",
      "smallcancel", "pieces", "rep",      "verify"};
  return names;
}

namespace cli_detail {

inline long long opt_int(const CommandRequest& req, const std::string& key,
                         long long fallback) {
  auto it = req.options.find(key);
  if (it == req.options.end()) return fallback;
  return std::stoll(it->second);
}

inline double opt_double(const CommandRequest& req, const std::string& key,
                         double fallback) {
  auto it = req.options.find(key);
  if (it == req.options.end()) return fallback;
  return std::stod(it->second);
}

inline long long integer_index(const CommandRequest& req) {
  if (!req.index) throw error("this command needs an index n >= 2");
  if (!req.index->is_integral()) throw error("index n must be an integer here");
  long long n = req.index->num().to_int64();
  if (n < 2) throw error("index n must be >= 2");
  return n;
}

inline Rational slope_arg(const CommandRequest& req, size_t i) {
  if (req.slopes.size() <= i) throw error("missing slope argument");
  return req.slopes[i];
}

inline HeckoidContext context_of(const CommandRequest& req) {
  if (!req.r) throw error("this command needs a context slope r");
  return HeckoidContext::make(*req.r, integer_index(req));
}

inline std::string render_table(const json& j, int indent = 0) {
  std::ostringstream out;
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n" << render_table(value, indent + 1);
    } else {
      out << pad << key << "  " << value.dump() << "\n";
    }
  }
  return out.str();
}

inline json cmd_word(const CommandRequest& req) {
  Rational s = slope_arg(req, 0);
  SlopeWord sw = riley_word(s);
  json j;
  j["slope"] = s.str();
  if (!s.is_infinite() && s > Rational(0) && s <= Rational(1))
    j["cf"] = to_json(to_continued_fraction(s));
  j["word"] = sw.word.str();
  j["hat_word"] = sw.hat.str();
  j["length"] = sw.word.size();
  return j;
}

inline json cmd_sseq(const CommandRequest& req) {
  Rational s = slope_arg(req, 0);
  json j;
  j["slope"] = s.str();
  j["s_sequence"] = to_json(slope_s_sequence(s));
  j["cyclic_s_sequence"] = to_json(slope_cyclic_s_sequence(s));
  return j;
}

inline json cmd_tseq(const CommandRequest& req) {
  Rational s = slope_arg(req, 0);
  json j;
  j["slope"] = s.str();
  j["t_sequence"] = to_json(t_sequence(s));
  j["reduced_slope"] = reduced_slope(s).str();
  return j;
}

inline json cmd_decomp(const CommandRequest& req) {
  Rational s = slope_arg(req, 0);
  SlopeWord sw = riley_word(s);
  SlopeDecomposition d = s1_s2_decomposition(s);
  json j;
  j["slope"] = s.str();
  j["word"] = sw.word.str();
  j["s_sequence"] = to_json(slope_s_sequence(s));
  ContinuedFraction cf = to_continued_fraction(s);
  if (cf.terms.size() >= 2) {
    j["t_sequence"] = to_json(t_sequence(s));
    CorollaryReport cor = check_corollary_patterns(s);
    json jc;
    jc["pattern"] = to_json(cor.pattern);
    jc["exempt"] = cor.exempt;
    jc["found"] = cor.found;
    j["corollary"] = jc;
  }
  j["s1"] = to_json(d.s1);
  j["s2"] = to_json(d.s2);
  j["recovered_slope"] = recover_slope(slope_cyclic_s_sequence(s)).str();
  return j;
}

inline json cmd_intervals(const CommandRequest& req) {
  if (!req.r) throw error("intervals: needs a slope r");
  if (!req.index) throw error("intervals: needs an index n");
  // 2n must be an integer >= 3; half-integers are allowed for inspection
  Rational two_n_rat = *req.index * Rational(2);
  if (!two_n_rat.is_integral()) throw error("intervals: 2n must be an integer");
  long long two_n = two_n_rat.num().to_int64();
  auto iv = fundamental_intervals_units(*req.r, two_n);
  json j;
  j["r"] = req.r->str();
  j["n"] = req.index->is_integral() ? json(req.index->num().to_int64())
                                    : json(req.index->str());
  j["intervals"] = to_json(iv);
  if (req.index->is_integral()) {
    auto ctx = HeckoidContext::make(*req.r, req.index->num().to_int64());
    j["parabolic"] = to_json(ctx.parabolic);
  }
  return j;
}

inline json cmd_normalize(const CommandRequest& req) {
  auto ctx = context_of(req);
  Rational s = slope_arg(req, 0);
  auto res = normalize(s, ctx, opt_int(req, "budget", 1000000));
  return to_json(res, s);
}

inline json cmd_trivial(const CommandRequest& req) {
  auto ctx = context_of(req);
  Rational s = slope_arg(req, 0);
  ClassifyOptions opts;
  opts.normalize_budget = opt_int(req, "budget", 1000000);
  opts.dehn_max_denominator = opt_int(req, "max-denom", 30);
  LoopClass cls = classify(s, ctx, opts);
  json j;
  j["r"] = ctx.r.str();
  j["n"] = ctx.n;
  j["s"] = s.str();
  j["trivial"] = cls.kind == LoopKind::trivial;
  j["class"] = to_json(cls);
  return j;
}

inline DecideOptions decide_options(const CommandRequest& req) {
  DecideOptions opts;
  opts.tol = opt_double(req, "tol", 1e-8);
  opts.classify.normalize_budget = opt_int(req, "budget", 1000000);
  opts.classify.dehn_max_denominator = opt_int(req, "max-denom", 30);
  return opts;
}

inline json cmd_conjugate(const CommandRequest& req) {
  auto ctx = context_of(req);
  Rational s = slope_arg(req, 0), s2 = slope_arg(req, 1);
  auto v = decide_conjugate(s, s2, ctx, decide_options(req));
  json j;
  j["r"] = ctx.r.str();
  j["n"] = ctx.n;
  j["s"] = s.str();
  j["s_prime"] = s2.str();
  j["conjugate"] = v.conjugate;
  j["normalized"] = {v.left.normalized.str(), v.right.normalized.str()};
  j["proven_scope"] = to_string(v.scope);
  json certs = json::array();
  if (v.non_conjugacy_certificate) certs.push_back(to_json(*v.non_conjugacy_certificate));
  j["certificates"] = certs;
  if (v.conjugator_witness) j["conjugator_witness"] = v.conjugator_witness->str();
  return j;
}

inline json cmd_peripheral(const CommandRequest& req) {
  auto ctx = context_of(req);
  Rational s = slope_arg(req, 0);
  auto v = decide_peripheral(s, ctx, decide_options(req));
  json j;
  j["r"] = ctx.r.str();
  j["n"] = ctx.n;
  j["s"] = s.str();
  j["peripheral"] = v.value == PeripheralAnswer::no ? json(false) : json("not-applicable");
  j["class"] = to_json(v.cls);
  j["proven_scope"] = to_string(v.scope);
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  return j;
}

inline json cmd_torsion(const CommandRequest& req) {
  auto ctx = context_of(req);
  Rational s = slope_arg(req, 0);
  auto v = decide_torsion(s, ctx, decide_options(req));
  json j;
  j["r"] = ctx.r.str();
  j["n"] = ctx.n;
  j["s"] = s.str();
  j["torsion"] = v.torsion;
  j["class"] = to_json(v.cls);
  j["proven_scope"] = to_string(v.scope);
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  return j;
}

inline json cmd_smallcancel(const CommandRequest& req) {
  if (!req.r) throw error("smallcancel: needs a context slope r");
  long long n = integer_index(req);
  auto R = symmetrize(make_presentation(*req.r, n));
  auto D = compute_pieces(R);
  auto cres = verify_C(R, D, 4 * n);
  auto tres = verify_T4(R);
  json j;
  j["r"] = req.r->str();
  j["n"] = n;
  j["element_count"] = R.elements.size();
  j["relator_length"] = R.relator_length;
  {
    json jc;
    jc["condition"] = "C(" + std::to_string(4 * n) + ")";
    jc["holds"] = cres.holds;
    jc["min_pieces"] = cres.min_pieces;
    if (cres.witness) {
      json w;
      w["element"] = R.elements[cres.witness->element_index].str();
      json cuts = json::array();
      for (size_t c : cres.witness->cuts) cuts.push_back(c);
      w["cuts"] = cuts;
      jc["witness"] = w;
    } else {
      jc["witness"] = nullptr;
    }
    j["C"] = jc;
  }
  {
    json jt;
    jt["condition"] = "T(4)";
    jt["holds"] = tres.holds;
    if (tres.witness) {
      jt["witness"] = {R.elements[tres.witness->elements[0]].str(),
                       R.elements[tres.witness->elements[1]].str(),
                       R.elements[tres.witness->elements[2]].str()};
    } else {
      jt["witness"] = nullptr;
    }
    j["T4"] = jt;
  }
  if (auto it = req.options.find("dehn"); it != req.options.end()) {
    Word w = free_reduce(parse_letters(it->second));
    DehnTrace trace;
    Word out = dehn_reduce(w, R, &trace);
    json jd;
    jd["input"] = w.str();
    jd["output"] = out.str();
    jd["trivial"] = out.empty();
    jd["trace"] = to_json(trace);
    j["dehn"] = jd;
  }
  if (auto it = req.options.find("patterns"); it != req.options.end()) {
    auto ctx = HeckoidContext::make(*req.r, n);
    auto rep = forbidden_pattern_report(Rational::parse(it->second), ctx);
    json jp;
    jp["s"] = rep.s.str();
    jp["degenerate"] = rep.degenerate;
    json checks = json::array();
    for (const auto& c : rep.checks) {
      json jc;
      jc["lemma"] = c.id;
      jc["applicable"] = c.applicable;
      jc["predicate"] = c.predicate;
      jc["violated"] = c.violated();
      checks.push_back(jc);
    }
    jp["checks"] = checks;
    j["patterns"] = jp;
  }
  if (auto it = req.options.find("conjugate-words"); it != req.options.end()) {
    auto comma = it->second.find(',');
    if (comma == std::string::npos)
      throw error("smallcancel: --conjugate-words expects 'u,v'");
    Word u = free_reduce(parse_letters(it->second.substr(0, comma)));
    Word v = free_reduce(parse_letters(it->second.substr(comma + 1)));
    auto sres = bounded_conjugacy_search(u, v, R,
                                         static_cast<size_t>(opt_int(req, "max-conj", 4)),
                                         opt_int(req, "budget", 2000000));
    json js;
    js["status"] = sres.status == SearchStatus::found              ? "found"
                   : sres.status == SearchStatus::budget_exhausted ? "budget-exhausted"
                                                                   : "no-witness-within-bound";
    if (sres.conjugator) js["conjugator"] = sres.conjugator->str();
    j["conjugacy_search"] = js;
  }
  return j;
}

inline json cmd_pieces(const CommandRequest& req) {
  if (!req.r) throw error("pieces: needs a context slope r");
  long long n = integer_index(req);
  auto R = symmetrize(make_presentation(*req.r, n));
  auto D = compute_pieces(R);
  json j;
  j["r"] = req.r->str();
  j["n"] = n;
  j["element_count"] = R.elements.size();
  j["relator_length"] = R.relator_length;
  j["max_piece_length"] = D.max_piece_length;
  j["relator_min_pieces"] = min_piece_count(R.source.relator, R, D);
  json maximal = json::array();
  for (size_t e = 0; e < R.elements.size(); ++e) {
    Word w;
    w.letters.assign(R.elements[e].letters.begin(),
                     R.elements[e].letters.begin() +
                         static_cast<long>(D.piece_prefix_len[e]));
    maximal.push_back(w.str());
  }
  std::sort(maximal.begin(), maximal.end());
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
  j["maximal_pieces"] = maximal;
  auto chk = check_maximal_piece_structure(*req.r, R, D);
  j["structure_lemma_holds"] = chk.holds;
  return j;
}

inline json cmd_rep(const CommandRequest& req) {
  if (!req.r) throw error("rep: needs a context slope r");
  long long n = integer_index(req);
  double tol = opt_double(req, "tol", 1e-10);
  auto reps = solve_representations(*req.r, n, tol);
  json j;
  j["r"] = req.r->str();
  j["n"] = n;
  j["trace_polynomial"] = trace_polynomial(*req.r).str();
  json jr = json::array();
  for (const auto& rep : reps) jr.push_back(to_json(rep));
  j["representations"] = jr;
  if (!req.slopes.empty()) {
    json traces = json::array();
    for (const auto& s : req.slopes) {
      json row;
      row["s"] = s.str();
      json per_rep = json::array();
      for (const auto& rep : reps) per_rep.push_back(to_json(trace_of_slope(s, rep)));
      row["traces"] = per_rep;
      traces.push_back(row);
    }
    j["traces"] = traces;
  }
  return j;
}

/// Randomized orbit property suite (idempotence + invariance); exposed in
/// addition to the named lemma sweeps so the seeded trials are scriptable.
inline json cmd_verify_orbit(const CommandRequest& req) {
  if (!req.r) throw error("verify orbit-machinery: needs -r and -n");
  auto ctx = context_of(req);
  long long trials = opt_int(req, "trials", 10000);
  uint64_t seed = static_cast<uint64_t>(opt_int(req, "seed", 20260808));
  long long max_den = opt_int(req, "max-denom", 1000000);
  std::mt19937_64 rng(seed);
  std::vector<FareyAutomorphism> gens = {gamma_infinity_generator(0),
                                         gamma_infinity_generator(1), ctx.parabolic,
                                         ctx.parabolic.inverse()};
  long long failures = 0;
  for (long long i = 0; i < trials; ++i) {
    long long den = 1 + static_cast<long long>(rng() % static_cast<uint64_t>(max_den));
    long long num =
        static_cast<long long>(rng() % static_cast<uint64_t>(2 * max_den + 1)) - max_den;
    Rational s(num, den);
    auto res = normalize(s, ctx);
    if (apply_witness(s, res.witness) != res.s0) ++failures;
    auto again = normalize(res.s0, ctx);
    if (again.s0 != res.s0 || !again.witness.empty()) ++failures;
    Rational moved = s;
    int len = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < len; ++k) moved = gens[rng() % 4].apply(moved);
    if (normalize(moved, ctx).s0 != res.s0) ++failures;
  }
  json j;
  j["lemma"] = "orbit-machinery";
  j["r"] = ctx.r.str();
  j["n"] = ctx.n;
  j["seed"] = seed;
  j["cases"] = trials;
  j["failures"] = failures;
  j["pass"] = failures == 0;
  return j;
}

inline json cmd_verify(const CommandRequest& req) {
  if (req.options.find("lemma") == req.options.end())
    throw error("verify: missing lemma id");
  std::string id = req.options.at("lemma");
  if (id == "orbit-machinery") return cmd_verify_orbit(req);
  VerifyParams prm;
  prm.max_denom = opt_int(req, "max-denom", 200);
  prm.interval.max_denom = opt_int(req, "max-denom", 100);
  prm.interval.p_max = opt_int(req, "p-max", 6);
  prm.cancel.p_max = opt_int(req, "p-max", 20);
  prm.crosscheck.max_denom = opt_int(req, "max-denom", 30);
  if (auto it = req.options.find("p-max"); it != req.options.end()) {
    prm.crosscheck.torus_p.clear();
    for (long long p = 2; p <= std::stoll(it->second); ++p)
      prm.crosscheck.torus_p.push_back(p);
  }
  // keep the slope sweeps at their own default when a shared flag is absent
  if (req.options.find("max-denom") == req.options.end()) {
    prm.max_denom = 200;
    prm.interval.max_denom = 100;
    prm.crosscheck.max_denom = 30;
  }
  return to_json(run_verify(id, prm));
}

}  // namespace cli_detail

/// Dispatch a parsed request; deterministic output, exit 0/1 mapping done by
/// the caller via exceptions.
inline CommandResult run(const CommandRequest& req) {
  using namespace cli_detail;
  json body;
  if (req.command == "word") body = cmd_word(req);
  else if (req.command == "sseq") body = cmd_sseq(req);
  else if (req.command == "tseq") body = cmd_tseq(req);
  else if (req.command == "decomp") body = cmd_decomp(req);
  else if (req.command == "intervals") body = cmd_intervals(req);
  else if (req.command == "normalize") body = cmd_normalize(req);
  else if (req.command == "trivial") body = cmd_trivial(req);
  else if (req.command == "conjugate") body = cmd_conjugate(req);
  else if (req.command == "peripheral") body = cmd_peripheral(req);
  else if (req.command == "torsion") body = cmd_torsion(req);
  else if (req.command == "smallcancel") body = cmd_smallcancel(req);
  else if (req.command == "pieces") body = cmd_pieces(req);
  else if (req.command == "rep") body = cmd_rep(req);
  else if (req.command == "verify") body = cmd_verify(req);
  else throw error("unknown command: " + req.command);

  json out;
  out["schema"] = "heckoid/1";
  out["command"] = req.command;
  for (auto& [k, v] : body.items()) out[k] = v;

  CommandResult res;
  res.exit_code = 0;
  res.output = req.table ? render_table(out) : out.dump(2) + "\n";
  return res;
}

}  // namespace heckoid
