#include <doctest.h>

#include "heckoid/cli.hpp"

using namespace heckoid;

namespace {
CommandRequest make_req(const std::string& cmd, const char* r, const char* n,
                        std::vector<const char*> slopes = {},
                        std::map<std::string, std::string> options = {}) {
  CommandRequest req;
  req.command = cmd;
  if (r) req.r = Rational::parse(r);
  if (n) req.index = Rational::parse(n);
  for (const char* s : slopes) req.slopes.push_back(Rational::parse(s));
  req.options = std::move(options);
  return req;
}
}  // namespace

TEST_CASE("every command is reachable from the dispatch table") {
  std::map<std::string, CommandRequest> sample;
  sample["word"] = make_req("word", nullptr, nullptr, {"2/9"});
  sample["sseq"] = make_req("sseq", nullptr, nullptr, {"10/37"});
  sample["tseq"] = make_req("tseq", nullptr, nullptr, {"10/37"});
  sample["decomp"] = make_req("decomp", nullptr, nullptr, {"8/35"});
  sample["intervals"] = make_req("intervals", "3/10", "2");
  sample["normalize"] = make_req("normalize", "3/10", "2", {"7/4"});
  sample["trivial"] = make_req("trivial", "1/2", "2", {"1/4"});
  sample["conjugate"] = make_req("conjugate", "1/2", "2", {"1/4", "3/4"});
  sample["peripheral"] = make_req("peripheral", "1/2", "2", {"1/4"});
  sample["torsion"] = make_req("torsion", "1/2", "2", {"1/4"});
  sample["smallcancel"] = make_req(
      "smallcancel", "1/2", "2", {},
      {{"dehn", "abABabAB"}, {"patterns", "1/5"}, {"conjugate-words", "abAB,bABa"}});
  sample["pieces"] = make_req("pieces", "1/2", "2");
  sample["rep"] = make_req("rep", "1/2", "2", {"0/1"});
  sample["verify"] =
      make_req("verify", nullptr, nullptr, {}, {{"lemma", "induction1"}, {"max-denom", "40"}});

  for (const auto& name : command_names()) {
    REQUIRE_MESSAGE(sample.count(name) == 1, "no sample invocation for ", name);
    auto res = run(sample[name]);
    CHECK(res.exit_code == 0);
    auto parsed = json::parse(res.output);
    CHECK(parsed["schema"] == "heckoid/1");
    CHECK(parsed["command"] == name);
  }
  CHECK_THROWS_AS(run(make_req("nonsense", nullptr, nullptr)), error);
}

TEST_CASE("golden CLI outputs") {
  auto sseq = json::parse(run(make_req("sseq", nullptr, nullptr, {"10/37"})).output);
  CHECK(sseq["s_sequence"] ==
        json::array({4, 4, 4, 3, 4, 4, 3, 4, 4, 3, 4, 4, 4, 3, 4, 4, 3, 4, 4, 3}));

  auto iv = json::parse(run(make_req("intervals", "3/10", "2")).output);
  CHECK(iv["intervals"]["closed_union"] ==
        json::array({json::array({"0/1", "5/17"}), json::array({"7/23", "1/1"})}));

  auto conj = json::parse(run(make_req("conjugate", "1/2", "2", {"1/4", "3/4"})).output);
  CHECK(conj["conjugate"] == false);
  CHECK(conj["normalized"] == json::array({"1/4", "3/4"}));
  CHECK(conj["proven_scope"] == "torus-link");
  CHECK(conj["certificates"].size() == 1);

  auto word = json::parse(run(make_req("word", nullptr, nullptr, {"2/9"})).output);
  CHECK(word["cf"] == json::array({4, 2}));

  auto triv = json::parse(run(make_req("trivial", "1/2", "2", {"inf"})).output);
  CHECK(triv["trivial"] == true);

  // slopes are accepted in continued fraction form everywhere
  CommandRequest cf_req;
  cf_req.command = "sseq";
  cf_req.slopes.push_back(from_continued_fraction(ContinuedFraction::parse("[3,1,2,3]")));
  CHECK(json::parse(run(cf_req).output)["slope"] == "10/37");
}

TEST_CASE("verify command") {
  auto rep = json::parse(
      run(make_req("verify", nullptr, nullptr, {}, {{"lemma", "properties"}, {"max-denom", "60"}}))
          .output);
  CHECK(rep["pass"] == true);
  CHECK(rep["failures"] == 0);
  CHECK(rep["cases"].get<long long>() > 0);

  auto orbit = json::parse(run(make_req("verify", "1/2", "2", {},
                                        {{"lemma", "orbit-machinery"},
                                         {"trials", "300"},
                                         {"seed", "42"},
                                         {"max-denom", "5000"}}))
                               .output);
  CHECK(orbit["pass"] == true);

  CHECK_THROWS_AS(run(make_req("verify", nullptr, nullptr, {}, {{"lemma", "bogus"}})),
                  error);
}

TEST_CASE("output is byte-stable across runs") {
  auto req = make_req("conjugate", "1/2", "2", {"1/4", "3/4"});
  CHECK(run(req).output == run(req).output);
  auto req2 = make_req("rep", "2/5", "2", {"0/1", "1/3"});
  CHECK(run(req2).output == run(req2).output);
}

TEST_CASE("table rendering") {
  auto req = make_req("intervals", "3/10", "2");
  req.table = true;
  auto res = run(req);
  CHECK(res.output.find("excluded_endpoint") != std::string::npos);
  CHECK(res.output.find('{') == std::string::npos);
}

TEST_CASE("domain errors surface as exceptions for the exit-1 path") {
  CHECK_THROWS_AS(run(make_req("word", nullptr, nullptr, {"5/3"})), error);
  CHECK_THROWS_AS(run(make_req("normalize", "1/2", "1", {"1/4"})), error);
  CHECK_THROWS_AS(run(make_req("tseq", nullptr, nullptr, {"1/5"})), error);
}
