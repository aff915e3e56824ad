// Command-line front end for the heckoid library: slope words, sequence
// invariants, Farey-orbit normalization, small-cancellation checks, trace
// certificates, and batch lemma sweeps.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "heckoid/cli.hpp"

namespace {

heckoid::Rational parse_slope_or_cf(const std::string& text) {
  if (!text.empty() && text.front() == '[')
    return heckoid::from_continued_fraction(heckoid::ContinuedFraction::parse(text));
  return heckoid::Rational::parse(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"even Heckoid group calculator for 2-bridge links"};
  app.require_subcommand(1);

  std::string r_text, n_text, lemma;
  std::string s1_text, s2_text, s3_text, s4_text;
  std::string dehn_word, conjugate_words, patterns_slope;
  long long max_denom = -1, budget = -1, p_max = -1, trials = -1, seed = -1, max_conj = -1;
  double tol = -1.0;
  bool table = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--table", table, "human-readable table output instead of JSON");
    cmd->add_option("--max-denom", max_denom, "denominator bound where applicable");
    cmd->add_option("--budget", budget, "iteration/work budget");
    cmd->add_option("--tol", tol, "numeric tolerance");
    cmd->add_option("--seed", seed, "seed for randomized property suites");
  };

  const char* slope_help = "slope, as q/p or [m1,...,mk]";

  auto add_slope_cmd = [&](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("s", s1_text, slope_help)->required();
    add_common(cmd);
    return cmd;
  };
  auto add_context_cmd = [&](const std::string& name, const std::string& desc,
                             int slope_args) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("r", r_text, "context slope, as q/p or [m1,...,mk]")->required();
    cmd->add_option("n", n_text, "index n (integer >= 2)")->required();
    if (slope_args >= 1) cmd->add_option("s", s1_text, slope_help)->required();
    if (slope_args >= 2) cmd->add_option("s2", s2_text, slope_help)->required();
    add_common(cmd);
    return cmd;
  };

  add_slope_cmd("word", "Riley word u_s of a slope");
  add_slope_cmd("sseq", "S-sequence and cyclic S-sequence of a slope");
  add_slope_cmd("tseq", "T-sequence of a slope (k >= 2)");
  add_slope_cmd("decomp", "(S1,S2,S1,S2) decomposition, corollary pattern, recovery");

  {
    CLI::App* cmd =
        app.add_subcommand("intervals", "fundamental intervals of the orbit action");
    cmd->add_option("r", r_text, "slope, as q/p or [m1,...,mk]")->required();
    cmd->add_option("n", n_text, "index n (>= 2; halves like 3/2 accepted here)")
        ->required();
    add_common(cmd);
  }

  add_context_cmd("normalize", "normalize a slope into I(r;n) u {inf, r}", 1);
  add_context_cmd("trivial", "is alpha_s trivial in the quotient?", 1);
  add_context_cmd("conjugate", "are alpha_s and alpha_s' homotopic?", 2);
  add_context_cmd("peripheral", "is alpha_s peripheral?", 1);
  add_context_cmd("torsion", "is alpha_s torsion?", 1);

  {
    CLI::App* cmd = app.add_subcommand("smallcancel",
                                       "C(4n)/T(4) verification and Dehn reduction");
    cmd->add_option("r", r_text)->required();
    cmd->add_option("n", n_text)->required();
    cmd->add_option("--dehn", dehn_word, "word to Dehn-reduce, over a,b,A,B");
    cmd->add_option("--patterns", patterns_slope,
                    "slope to test against the interval pattern lemmas (r = 1/p only)");
    cmd->add_option("--conjugate-words", conjugate_words,
                    "pair 'u,v' for the bounded conjugacy search");
    cmd->add_option("--max-conj", max_conj, "conjugator length bound");
    add_common(cmd);
  }
  {
    CLI::App* cmd = app.add_subcommand("pieces", "piece dictionary of the relator set");
    cmd->add_option("r", r_text)->required();
    cmd->add_option("n", n_text)->required();
    add_common(cmd);
  }
  {
    CLI::App* cmd =
        app.add_subcommand("rep", "parabolic representations and slope traces");
    cmd->add_option("r", r_text)->required();
    cmd->add_option("n", n_text)->required();
    cmd->add_option("s", s1_text, "slope to trace (optional)");
    cmd->add_option("s2", s2_text, "second slope to trace");
    cmd->add_option("s3", s3_text, "third slope to trace");
    cmd->add_option("s4", s4_text, "fourth slope to trace");
    add_common(cmd);
  }
  {
    CLI::App* cmd = app.add_subcommand("verify", "batch lemma verification sweeps");
    cmd->add_option("lemma", lemma,
                    "one of: properties induction1 sequence relation corollary "
                    "connection inside-orbit outside-orbit outside-orbit2 "
                    "maximal-piece small-cancellation reformulation-crosscheck "
                    "orbit-machinery")
        ->required();
    cmd->add_option("-r,--slope", r_text, "context slope (orbit-machinery only)");
    cmd->add_option("-n,--index", n_text, "context index (orbit-machinery only)");
    cmd->add_option("--p-max", p_max, "largest denominator p of context slopes");
    cmd->add_option("--trials", trials, "randomized trial count");
    add_common(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 0 covers --help; everything else is usage
  }

  try {
    heckoid::CommandRequest req;
    CLI::App* sub = app.get_subcommands().front();
    req.command = sub->get_name();
    req.table = table;
    if (!r_text.empty()) req.r = parse_slope_or_cf(r_text);
    if (!n_text.empty()) req.index = heckoid::Rational::parse(n_text);
    for (const std::string* s : {&s1_text, &s2_text, &s3_text, &s4_text})
      if (!s->empty()) req.slopes.push_back(parse_slope_or_cf(*s));
    if (!lemma.empty()) req.options["lemma"] = lemma;
    if (!dehn_word.empty()) req.options["dehn"] = dehn_word;
    if (!conjugate_words.empty()) req.options["conjugate-words"] = conjugate_words;
    if (!patterns_slope.empty()) req.options["patterns"] = patterns_slope;
    if (max_denom >= 0) req.options["max-denom"] = std::to_string(max_denom);
    if (budget >= 0) req.options["budget"] = std::to_string(budget);
    if (p_max >= 0) req.options["p-max"] = std::to_string(p_max);
    if (trials >= 0) req.options["trials"] = std::to_string(trials);
    if (seed >= 0) req.options["seed"] = std::to_string(seed);
    if (max_conj >= 0) req.options["max-conj"] = std::to_string(max_conj);
    if (tol >= 0) req.options["tol"] = std::to_string(tol);

    heckoid::CommandResult res = heckoid::run(req);
    std::cout << res.output;
    return res.exit_code;
  } catch (const heckoid::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
