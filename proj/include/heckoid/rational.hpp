#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heckoid/bigint.hpp"
#include "heckoid/errors.hpp"

namespace heckoid {

/// Slope in Q U {inf}: reduced fraction, denominator >= 0, sign on the
/// numerator. Infinity is stored canonically as 1/0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(int v) : num_(v), den_(1) {}        // NOLINT

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }
  Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

  static Rational infinity() {
    Rational r;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_infinite() const { return den_.is_zero(); }
  bool is_integral() const { return den_.is_one(); }
  bool is_zero() const { return !is_infinite() && num_.is_zero(); }
  int sgn() const { return num_.sgn(); }

  BigInt floor() const {
    require_finite("floor");
    return BigInt::fdiv(num_, den_);
  }

  double to_double() const {
    if (is_infinite()) return std::numeric_limits<double>::infinity();
    return num_.to_double() / den_.to_double();
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    a.require_finite("+");
    b.require_finite("+");
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    a.require_finite("-");
    b.require_finite("-");
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a) {
    if (a.is_infinite()) return a;  // -inf = inf projectively
    Rational r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    a.require_finite("*");
    b.require_finite("*");
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    a.require_finite("/");
    b.require_finite("/");
    if (b.num_.is_zero()) throw error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational reciprocal() const {
    require_finite("reciprocal");
    if (num_.is_zero()) throw error("Rational: reciprocal of zero");
    return Rational(den_, num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  // finite comparison; inf sorts above every rational (projective caveats are
  // the caller's problem)
  friend bool operator<(const Rational& a, const Rational& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  static Rational mediant(const Rational& a, const Rational& b) {
    return Rational(a.num_ + b.num_, a.den_ + b.den_);
  }

  /// Text form: "q/p", "inf", or a bare integer.
  static Rational parse(std::string_view s) {
    if (s == "inf" || s == "Inf" || s == "INF" || s == "1/0") return infinity();
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
      return Rational(BigInt::parse(s), BigInt(1));
    }
    BigInt n = BigInt::parse(s.substr(0, slash));
    BigInt d = BigInt::parse(s.substr(slash + 1));
    if (d.is_zero()) {
      if (n.is_zero()) throw error("Rational::parse: 0/0");
      return infinity();
    }
    return Rational(std::move(n), std::move(d));
  }

  std::string str() const {
    if (is_infinite()) return "inf";
    return num_.str() + "/" + den_.str();
  }

 private:
  BigInt num_, den_;

  void require_finite(const char* op) const {
    if (is_infinite()) throw error(std::string("Rational: '") + op + "' on infinity");
  }

  void normalize() {
    if (den_.is_zero()) {
      if (num_.is_zero()) throw error("Rational: 0/0 is not a slope");
      num_ = 1;
      return;
    }
    if (den_.sgn() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_.is_zero()) {
      den_ = 1;
      return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
};

using Slope = Rational;

inline std::string to_string(const Rational& r) { return r.str(); }

// ---------------------------------------------------------------------------
// Continued fractions [m1,...,mk] = 1/(m1 + 1/(m2 + ... + 1/mk)),
// positive terms, mk >= 2 unless k = 1. Values lie in (0, 1].
// ---------------------------------------------------------------------------

struct ContinuedFraction {
  std::vector<long long> terms;

  void validate() const {
    if (terms.empty()) throw error("ContinuedFraction: empty term list");
    for (long long t : terms)
      if (t < 1) throw error("ContinuedFraction: non-positive term");
    if (terms.size() > 1 && terms.back() < 2)
      throw error("ContinuedFraction: final term must be >= 2");
  }

  std::string str() const {
    std::string out = "[";
    for (size_t i = 0; i < terms.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(terms[i]);
    }
    return out + "]";
  }

  static ContinuedFraction parse(std::string_view s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
      throw error("ContinuedFraction::parse: expected [m1,m2,...]");
    ContinuedFraction cf;
    std::string cur;
    for (char c : s.substr(1, s.size() - 2)) {
      if (c == ' ') continue;
      if (c == ',') {
        if (cur.empty()) throw error("ContinuedFraction::parse: empty term");
        cf.terms.push_back(std::stoll(cur));
        cur.clear();
      } else if (c >= '0' && c <= '9') {
        cur.push_back(c);
      } else {
        throw error("ContinuedFraction::parse: bad character");
      }
    }
    if (cur.empty()) throw error("ContinuedFraction::parse: empty term");
    cf.terms.push_back(std::stoll(cur));
    cf.validate();
    return cf;
  }

  friend bool operator==(const ContinuedFraction& a, const ContinuedFraction& b) {
    return a.terms == b.terms;
  }
};

inline Rational from_continued_fraction(const ContinuedFraction& cf) {
  cf.validate();
  Rational val(1, cf.terms.back());
  for (size_t i = cf.terms.size() - 1; i-- > 0;)
    val = (Rational(cf.terms[i]) + val).reciprocal();
  return val;
}

inline ContinuedFraction to_continued_fraction(const Rational& s) {
  if (s.is_infinite() || s <= Rational(0) || s > Rational(1))
    throw error("to_continued_fraction: slope must satisfy 0 < s <= 1");
  ContinuedFraction cf;
  BigInt q = s.num(), p = s.den();
  // Euclid quotients; the last quotient is automatically >= 2 except for 1/1.
  while (!q.is_zero()) {
    BigInt m, r;
    BigInt::divmod(p, q, m, r);
    if (!m.fits_int64()) throw error("to_continued_fraction: term overflow");
    cf.terms.push_back(m.to_int64());
    p = std::move(q);
    q = std::move(r);
  }
  cf.validate();
  return cf;
}

// ---------------------------------------------------------------------------
// Slope canonicalization under s -> s+1 and s -> -s, landing in (0, 1/2].
// ---------------------------------------------------------------------------

enum class SlopeMove : uint8_t { translate_up, translate_down, negate };

inline const char* to_string(SlopeMove m) {
  switch (m) {
    case SlopeMove::translate_up: return "s+1";
    case SlopeMove::translate_down: return "s-1";
    case SlopeMove::negate: return "-s";
  }
  return "?";
}

struct CanonicalSlope {
  Slope value;
  // run-length encoded move log, applied left to right
  std::vector<std::pair<SlopeMove, BigInt>> moves;
  bool is_integral = false;
  bool is_infinite = false;
};

inline Slope replay_slope_moves(const Slope& s,
                                const std::vector<std::pair<SlopeMove, BigInt>>& moves) {
  Slope cur = s;
  for (const auto& [kind, count] : moves) {
    if (cur.is_infinite()) continue;  // all three moves fix infinity
    switch (kind) {
      case SlopeMove::translate_up:
        cur = cur + Rational(count, BigInt(1));
        break;
      case SlopeMove::translate_down:
        cur = cur - Rational(count, BigInt(1));
        break;
      case SlopeMove::negate:
        if (count.is_odd()) cur = -cur;
        break;
    }
  }
  return cur;
}

/// Moves s into (0, 1/2] when possible. Integers collapse to the sentinel 0/1
/// and infinity stays put; both are flagged.
inline CanonicalSlope canonicalize_slope(const Slope& s) {
  CanonicalSlope out;
  if (s.is_infinite()) {
    out.value = s;
    out.is_infinite = true;
    return out;
  }
  Slope cur = s;
  if (cur.sgn() < 0) {
    cur = -cur;
    out.moves.emplace_back(SlopeMove::negate, BigInt(1));
  }
  BigInt f = cur.floor();
  if (f.sgn() > 0) {
    cur = cur - Rational(f, BigInt(1));
    out.moves.emplace_back(SlopeMove::translate_down, f);
  }
  if (cur.is_zero()) {
    out.value = cur;
    out.is_integral = true;
    return out;
  }
  if (cur > Rational(1, 2)) {  // reflect (1/2, 1) across 1/2
    cur = Rational(1) - cur;
    out.moves.emplace_back(SlopeMove::negate, BigInt(1));
    out.moves.emplace_back(SlopeMove::translate_up, BigInt(1));
  }
  out.value = cur;
  return out;
}

}  // namespace heckoid
