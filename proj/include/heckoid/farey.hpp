#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "heckoid/rational.hpp"

namespace heckoid {

/// Integer 2x2 matrix with determinant +-1 acting on Q U {inf} by linear
/// fractional transformation. det = -1 marks the orientation-reversing
/// (reflection) elements; composition keeps the flag in sync.
struct FareyAutomorphism {
  BigInt a{1}, b{0}, c{0}, d{1};
  int det = 1;

  static FareyAutomorphism identity() { return {}; }

  /// Reflection in the Farey edge from inf to the integer k: x -> 2k - x.
  static FareyAutomorphism reflection(const BigInt& k) {
    FareyAutomorphism f;
    f.a = -1;
    f.b = k * BigInt(2);
    f.c = 0;
    f.d = 1;
    f.det = -1;
    return f;
  }

  /// x -> x + t. Lies in the group generated by the reflections iff t is even.
  static FareyAutomorphism translation(const BigInt& t) {
    FareyAutomorphism f;
    f.b = t;
    return f;
  }

  /// I + units * N where N is the nilpotent with image spanned by (q, p);
  /// fixes q/p, trace 2, shifts the Farey fan at q/p by `units`.
  static FareyAutomorphism parabolic_about(const Rational& r, const BigInt& units) {
    if (r.is_infinite()) throw error("parabolic_about: finite slope required");
    const BigInt& q = r.num();
    const BigInt& p = r.den();
    FareyAutomorphism f;
    f.a = BigInt(1) - units * p * q;
    f.b = units * q * q;
    f.c = -(units * p * p);
    f.d = BigInt(1) + units * p * q;
    return f;
  }

  Rational apply(const Rational& s) const {
    BigInt n = a * s.num() + b * s.den();
    BigInt m = c * s.num() + d * s.den();
    if (m.is_zero()) {
      if (n.is_zero()) throw internal_error("FareyAutomorphism: degenerate image");
      return Rational::infinity();
    }
    return Rational(std::move(n), std::move(m));
  }

  /// this after rhs: (f.compose(g))(s) = f(g(s)).
  FareyAutomorphism compose(const FareyAutomorphism& g) const {
    FareyAutomorphism r;
    r.a = a * g.a + b * g.c;
    r.b = a * g.b + b * g.d;
    r.c = c * g.a + d * g.c;
    r.d = c * g.b + d * g.d;
    r.det = det * g.det;
    return r;
  }

  FareyAutomorphism inverse() const {
    FareyAutomorphism r;
    if (det == 1) {
      r.a = d;
      r.b = -b;
      r.c = -c;
      r.d = a;
    } else {
      r.a = -d;
      r.b = b;
      r.c = c;
      r.d = -a;
    }
    r.det = det;
    return r;
  }

  bool fixes(const Rational& s) const { return apply(s) == s; }
  bool is_identity() const { return a.is_one() && d.is_one() && b.is_zero() && c.is_zero(); }

  BigInt determinant() const { return a * d - b * c; }
  void validate() const {
    BigInt dd = determinant();
    if (dd != BigInt(det) || (det != 1 && det != -1))
      throw error("FareyAutomorphism: determinant must be +-1 and match flag");
  }

  std::string str() const {
    return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
  }

  friend bool operator==(const FareyAutomorphism& x, const FareyAutomorphism& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

inline FareyAutomorphism gamma_infinity_generator(long long k) {
  return FareyAutomorphism::reflection(BigInt(k));
}

/// Stern-Brocot parents of a slope in (0,1): the two Farey neighbors u < r < v
/// with u + v = r as mediants.
inline std::pair<Rational, Rational> farey_parents(const Rational& r) {
  if (r.is_infinite() || r <= Rational(0) || r >= Rational(1))
    throw error("farey_parents: slope must satisfy 0 < r < 1");
  const BigInt& q = r.num();
  const BigInt& p = r.den();
  // below parent q1/p1 with q1*p - p1*q = -1, 0 <= q1 < q, 0 < p1 < p
  BigInt q1, p1;
  if (q.is_one()) {
    q1 = 0;
    p1 = 1;
  } else {
    // find p^{-1} mod q by brute Euclid on BigInt
    BigInt t0 = 0, t1 = 1, r0 = q, r1 = p % q;
    while (!r1.is_zero()) {
      BigInt quot = r0 / r1;
      BigInt t2 = t0 - quot * t1;
      t0 = std::move(t1);
      t1 = std::move(t2);
      BigInt r2 = r0 % r1;
      r0 = std::move(r1);
      r1 = std::move(r2);
    }
    // t0 = p^{-1} (mod q), possibly negative
    BigInt inv = t0 % q;
    if (inv.sgn() < 0) inv += q;
    q1 = (q - inv) % q;  // q1 = -p^{-1} mod q
    p1 = (q1 * p + BigInt(1)) / q;
  }
  Rational below(q1, p1);
  Rational above(q - below.num(), p - below.den());
  return {below, above};
}

/// The union of two closed intervals [0, a] U [b, 1] traced out by the
/// fundamental domain; I(r;n) removes the excluded endpoint a.
struct FundamentalIntervals {
  Rational a;         // upper endpoint of the component containing 0
  Rational b;         // lower endpoint of the component containing 1
  Rational excluded;  // = a under the convention used here

  bool in_closed(const Rational& s) const {
    if (s.is_infinite()) return false;
    return (s >= Rational(0) && s <= a) || (s >= b && s <= Rational(1));
  }
  bool in_fundamental(const Rational& s) const {  // membership in I(r;n)
    return in_closed(s) && s != excluded;
  }
  bool in_gap(const Rational& s) const {
    if (s.is_infinite()) return false;
    return s > a && s < b;
  }
};

namespace detail {
/// i-th mediant step from `base` toward r.
inline Rational fan_chain(const Rational& base, const Rational& r, const BigInt& i) {
  return Rational(base.num() + i * r.num(), base.den() + i * r.den());
}
}  // namespace detail

/// Boundary trace of the fundamental domain cut out by the vertical edges at
/// 0 and 1 and a pair of fan edges at r identified by the 2n-unit parabolic.
/// two_n is even for the groups decided here; odd values (half-integer index)
/// are accepted for interval inspection only.
inline FundamentalIntervals fundamental_intervals_units(const Rational& r, long long two_n) {
  if (r.is_infinite() || r <= Rational(0) || r >= Rational(1))
    throw error("fundamental_intervals: slope must satisfy 0 < r < 1");
  if (two_n < 3) throw error("fundamental_intervals: need 2n >= 3");
  auto [below, above] = farey_parents(r);
  const size_t k = to_continued_fraction(r).terms.size();
  // Endpoints are the continued-fraction extensions [m1..mk, 2n-2] and
  // [m1..mk - 1, 2]; in fan-step terms that is 2n-2 steps past the previous
  // convergent and 1 step past the other parent.
  long long below_steps = (k % 2 == 1) ? two_n - 2 : 1;
  long long above_steps = (k % 2 == 1) ? 1 : two_n - 2;
  FundamentalIntervals iv;
  iv.a = detail::fan_chain(below, r, BigInt(below_steps));
  iv.b = detail::fan_chain(above, r, BigInt(above_steps));
  iv.excluded = iv.a;
  return iv;
}

inline FundamentalIntervals fundamental_intervals(const Rational& r, long long n) {
  if (n < 2) throw error("fundamental_intervals: index n must be >= 2");
  return fundamental_intervals_units(r, 2 * n);
}

/// The n-less intervals for r = 1/p: I_1(1/p) = {0}, I_2(1/p) = [1/(p-1), 1].
struct TorusIntervals {
  Rational i2_lo;  // 1/(p-1)
  bool in_i1(const Rational& s) const { return s == Rational(0); }
  bool in_i2(const Rational& s) const {
    return !s.is_infinite() && s >= i2_lo && s <= Rational(1);
  }
};

inline TorusIntervals torus_intervals(long long p) {
  if (p < 2) throw error("torus_intervals: p >= 2 required");
  return TorusIntervals{Rational(1, p - 1)};
}

/// Immutable context for one Heckoid quotient: the slope, the index, the
/// fundamental intervals and the 2n-unit parabolic that identifies their
/// inner endpoints.
struct HeckoidContext {
  Rational r;
  long long n = 0;
  FundamentalIntervals intervals;
  FareyAutomorphism parabolic;          // maps excluded endpoint a to b
  Rational below_parent, above_parent;  // Stern-Brocot parents of r
  long long pos_hi = 0;                 // fan position of a (below side)
  long long pos_lo = 0;                 // fan position of b; pos_hi - pos_lo = 2n

  static HeckoidContext make(const Rational& r, long long n) {
    if (n < 2) throw error("HeckoidContext: index n must be >= 2");
    if (r.is_infinite() || r <= Rational(0) || r >= Rational(1))
      throw error("HeckoidContext: slope must satisfy 0 < r < 1 (canonicalize first)");
    HeckoidContext ctx;
    ctx.r = r;
    ctx.n = n;
    ctx.intervals = fundamental_intervals(r, n);
    auto [below, above] = farey_parents(r);
    ctx.below_parent = below;
    ctx.above_parent = above;
    const size_t k = to_continued_fraction(r).terms.size();
    ctx.pos_hi = (k % 2 == 1) ? 2 * n - 2 : 1;
    ctx.pos_lo = ctx.pos_hi - 2 * n;
    // Orientation is pinned by the endpoint condition, not guessed: the
    // generator must carry the excluded endpoint a to b.
    FareyAutomorphism g = FareyAutomorphism::parabolic_about(r, BigInt(-2 * n));
    if (g.apply(ctx.intervals.a) != ctx.intervals.b) {
      g = FareyAutomorphism::parabolic_about(r, BigInt(2 * n));
      if (g.apply(ctx.intervals.a) != ctx.intervals.b)
        throw internal_error("HeckoidContext: no parabolic orientation maps a to b");
    }
    ctx.parabolic = g;
    return ctx;
  }
};

inline FareyAutomorphism parabolic_generator(const Rational& r, long long n) {
  return HeckoidContext::make(r, n).parabolic;
}

struct NormalizeResult {
  Rational s0;
  std::vector<FareyAutomorphism> witness;  // applied left to right moves s to s0
  long long steps = 0;
};

namespace detail {
/// Largest fan index i >= 0 with chain(base, i) weakly on the `r`-side of s:
/// below side: chain increases to r, want max i with y_i <= s;
/// above side: chain decreases to r, want max i with z_j >= s.
inline BigInt fan_index(const Rational& base, const Rational& r, const Rational& s,
                        bool below) {
  // y_i <= s  <=>  i * (q*sd - p*sn) <= p0*sn - q0*sd   (below, coeff > 0)
  // z_j >= s  <=>  j * (p*sn - q*sd) <= q0*sd - p0*sn   (above, coeff > 0)
  BigInt coeff = r.num() * s.den() - r.den() * s.num();
  BigInt rhs = base.den() * s.num() - base.num() * s.den();
  if (!below) {
    coeff = -coeff;
    rhs = -rhs;
  }
  if (coeff.sgn() <= 0) throw internal_error("fan_index: s not strictly between base side and r");
  return BigInt::fdiv(rhs, coeff);
}
}  // namespace detail

namespace detail {
inline bool is_fundamental_point(const Rational& s, const HeckoidContext& ctx) {
  return s.is_infinite() || s == ctx.r || ctx.intervals.in_fundamental(s);
}

/// Breadth-first fallback over the generator set, with the generator path
/// recorded so the caller still gets a replayable witness. Only consulted
/// when the fast descent exhausts its budget.
inline std::optional<NormalizeResult> normalize_bfs(const Rational& s,
                                                    const HeckoidContext& ctx,
                                                    long long max_nodes) {
  std::vector<FareyAutomorphism> gens = {
      FareyAutomorphism::reflection(BigInt(0)), FareyAutomorphism::reflection(BigInt(1)),
      ctx.parabolic, ctx.parabolic.inverse()};
  struct Node {
    Rational value;
    long long parent;
    int gen;
  };
  std::vector<Node> nodes{{s, -1, -1}};
  std::set<std::string> seen{s.str()};
  for (long long head = 0; head < static_cast<long long>(nodes.size()); ++head) {
    Rational cur = nodes[static_cast<size_t>(head)].value;
    if (is_fundamental_point(cur, ctx)) {
      NormalizeResult res;
      res.s0 = cur;
      res.steps = head;
      for (long long at = head; nodes[static_cast<size_t>(at)].parent >= 0;
           at = nodes[static_cast<size_t>(at)].parent)
        res.witness.push_back(gens[static_cast<size_t>(nodes[static_cast<size_t>(at)].gen)]);
      std::reverse(res.witness.begin(), res.witness.end());
      return res;
    }
    if (static_cast<long long>(nodes.size()) >= max_nodes) break;
    for (int g = 0; g < 4; ++g) {
      Rational next = gens[static_cast<size_t>(g)].apply(cur);
      if (!seen.insert(next.str()).second) continue;
      nodes.push_back({std::move(next), head, g});
    }
  }
  return std::nullopt;
}
}  // namespace detail

/// Moves s into I(r;n) U {inf, r} by alternating reflections/translations
/// from the vertical-edge group with powers of the context parabolic.
/// The step budget guards the loop; on exhaustion a bounded breadth-first
/// search over the generators takes over, and only if that is also
/// exhausted does the call raise budget_error - never a wrong answer.
inline NormalizeResult normalize(const Rational& s, const HeckoidContext& ctx,
                                 long long budget = 1000000) {
  NormalizeResult res;
  Rational cur = s;
  const Rational zero(0), one(1);
  while (true) {
    if (++res.steps > budget) {
      auto fallback = detail::normalize_bfs(s, ctx, std::max<long long>(budget, 4096));
      if (fallback) return *fallback;
      throw budget_error("normalize: step budget exhausted at " + cur.str());
    }
    if (cur.is_infinite() || cur == ctx.r) break;
    if (cur < zero || cur > one) {
      BigInt f = BigInt::fdiv(cur.num(), cur.den() * BigInt(2));
      if (!f.is_zero()) {
        FareyAutomorphism t = FareyAutomorphism::translation(BigInt(-2) * f);
        cur = t.apply(cur);
        res.witness.push_back(std::move(t));
      }
      if (cur > one) {  // reflect (1,2) across the edge at 1
        FareyAutomorphism refl = FareyAutomorphism::reflection(BigInt(1));
        cur = refl.apply(cur);
        res.witness.push_back(std::move(refl));
      }
      continue;
    }
    if (ctx.intervals.in_fundamental(cur)) break;
    // cur is the excluded endpoint or lies in the open gap (a, b) \ {r}
    long long two_n = 2 * ctx.n;
    BigInt t;
    bool inverse_power = false;
    if (cur < ctx.r) {
      BigInt i = detail::fan_index(ctx.below_parent, ctx.r, cur, /*below=*/true);
      // shift fan interval [i, i+1] into the window [pos_lo, pos_hi]
      BigInt excess = i - BigInt(ctx.pos_hi - 1);
      t = BigInt::fdiv(excess + BigInt(two_n - 1), BigInt(two_n));
    } else {
      BigInt j = detail::fan_index(ctx.above_parent, ctx.r, cur, /*below=*/false);
      // interval position is [-j-2, -j-1]; shift up into the window
      BigInt deficit = BigInt(ctx.pos_lo) + j + BigInt(2);
      t = BigInt::fdiv(deficit + BigInt(two_n - 1), BigInt(two_n));
      inverse_power = true;
    }
    if (t.sgn() <= 0) throw internal_error("normalize: non-positive fan jump");
    BigInt units = BigInt(-two_n) * t;
    if (inverse_power) units = -units;
    // the t-th power of the context parabolic (or its inverse), in closed form
    FareyAutomorphism jump = FareyAutomorphism::parabolic_about(ctx.r, std::move(units));
    Rational next = jump.apply(cur);
    if (ctx.intervals.in_gap(next))
      throw internal_error("normalize: fan jump failed to leave the gap");
    cur = std::move(next);
    res.witness.push_back(std::move(jump));
  }
  res.s0 = cur;
  return res;
}

inline bool in_orbit_of_infinity(const Rational& s, const HeckoidContext& ctx,
                                 long long budget = 1000000) {
  return normalize(s, ctx, budget).s0.is_infinite();
}

inline Rational apply_witness(const Rational& s, const std::vector<FareyAutomorphism>& ws) {
  Rational cur = s;
  for (const auto& w : ws) cur = w.apply(cur);
  return cur;
}

}  // namespace heckoid
