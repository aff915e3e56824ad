#pragma once

#include <json.hpp>

#include "heckoid/decide.hpp"
#include "heckoid/farey.hpp"
#include "heckoid/kleinian.hpp"
#include "heckoid/presentation.hpp"
#include "heckoid/smallcancel.hpp"
#include "heckoid/verify.hpp"

namespace heckoid {

// ordered_json keeps key order stable, which keeps CLI output byte-stable
using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const Seq& s) {
  json arr = json::array();
  for (long long v : s) arr.push_back(v);
  return arr;
}

inline json to_json(const CyclicSeq& s) { return to_json(s.vals); }

inline json to_json(const Word& w) { return w.str(); }

inline json to_json(const FareyAutomorphism& f) {
  json m;
  m["matrix"] = json::array(
      {json::array({f.a.str(), f.b.str()}), json::array({f.c.str(), f.d.str()})});
  m["det"] = f.det;
  return m;
}

inline json to_json(const ContinuedFraction& cf) {
  json arr = json::array();
  for (long long t : cf.terms) arr.push_back(t);
  return arr;
}

inline json to_json(const FundamentalIntervals& iv) {
  json j;
  j["closed_union"] = json::array(
      {json::array({"0/1", iv.a.str()}), json::array({iv.b.str(), "1/1"})});
  j["excluded_endpoint"] = iv.excluded.str();
  j["fundamental_set"] = "[0," + iv.a.str() + ") u [" + iv.b.str() + ",1]";
  return j;
}

inline json to_json(const NormalizeResult& res, const Rational& input) {
  json j;
  j["s"] = input.str();
  j["s0"] = res.s0.str();
  json witness = json::array();
  for (const auto& w : res.witness) witness.push_back(to_json(w));
  j["witness"] = witness;
  j["steps"] = res.steps;
  return j;
}

inline json to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const ParabolicRepresentation& rep) {
  json j;
  j["omega"] = to_json(rep.omega);
  j["n"] = rep.n;
  j["target_trace"] = rep.target_trace;
  j["residual"] = rep.residual;
  j["power_residual"] = rep.power_residual;
  return j;
}

inline json to_json(const TraceCertificate& cert) {
  json j;
  j["kind"] = to_string(cert.kind);
  json slopes = json::array();
  for (const auto& s : cert.slopes) slopes.push_back(s.str());
  j["slopes"] = slopes;
  j["rep_index"] = cert.rep_index;
  j["omega"] = to_json(cert.omega);
  json traces = json::array();
  for (const auto& t : cert.traces) traces.push_back(to_json(t));
  j["traces"] = traces;
  j["margin"] = cert.margin;
  return j;
}

inline json to_json(const LoopClass& cls) {
  json j;
  j["input"] = cls.input.str();
  j["normalized"] = cls.normalized.str();
  j["kind"] = to_string(cls.kind);
  j["steps"] = cls.norm.steps;
  if (cls.dehn_trivial.has_value()) {
    j["dehn_trivial"] = *cls.dehn_trivial;
    j["dehn_agrees"] = *cls.dehn_agrees;
  }
  return j;
}

inline json to_json(const SweepReport& rep) {
  json j;
  j["lemma"] = rep.id;
  j["cases"] = rep.cases;
  j["failures"] = rep.failures;
  j["pass"] = rep.pass();
  json notes = json::array();
  for (const auto& n : rep.notes) notes.push_back(n);
  j["notes"] = notes;
  return j;
}

inline json to_json(const DehnTrace& trace) {
  json arr = json::array();
  for (const auto& s : trace.steps) {
    json step;
    step["position"] = s.position;
    step["rotation"] = s.rotation;
    step["element"] = s.element;
    step["matched_len"] = s.matched_len;
    step["replacement"] = s.replacement;
    arr.push_back(step);
  }
  return arr;
}

}  // namespace heckoid
