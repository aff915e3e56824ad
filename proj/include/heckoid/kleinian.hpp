#pragma once

#include <eigen3/Eigen/Eigenvalues>

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "heckoid/farey.hpp"
#include "heckoid/presentation.hpp"

namespace heckoid {

/// Dense integer-coefficient polynomial in one variable (ascending order).
struct IntPoly {
  std::vector<BigInt> coeffs;  // coeffs[i] * w^i; no trailing zeros

  static IntPoly constant(BigInt c) {
    IntPoly p;
    if (!c.is_zero()) p.coeffs.push_back(std::move(c));
    return p;
  }
  static IntPoly variable() {
    IntPoly p;
    p.coeffs = {BigInt(0), BigInt(1)};
    return p;
  }

  bool is_zero() const { return coeffs.empty(); }
  size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  void trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
      if (i < a.coeffs.size()) r.coeffs[i] += a.coeffs[i];
      if (i < b.coeffs.size()) r.coeffs[i] += b.coeffs[i];
    }
    r.trim();
    return r;
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
      if (i < a.coeffs.size()) r.coeffs[i] += a.coeffs[i];
      if (i < b.coeffs.size()) r.coeffs[i] -= b.coeffs[i];
    }
    r.trim();
    return r;
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i)
      for (size_t j = 0; j < b.coeffs.size(); ++j)
        r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    r.trim();
    return r;
  }
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    if (a.coeffs.size() != b.coeffs.size()) return false;
    for (size_t i = 0; i < a.coeffs.size(); ++i)
      if (!(a.coeffs[i] == b.coeffs[i])) return false;
    return true;
  }

  template <typename C>
  C eval(const C& x) const {
    C acc{};
    for (size_t i = coeffs.size(); i-- > 0;)
      acc = acc * x + C(static_cast<double>(coeffs[i].to_double()));
    return acc;
  }

  std::string str() const {  // human form, lowest degree last
    if (coeffs.empty()) return "0";
    std::string out;
    for (size_t i = coeffs.size(); i-- > 0;) {
      if (coeffs[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      if (i == 0) {
        out += coeffs[i].str();
      } else {
        out += coeffs[i].str() + "*w^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }
};

namespace detail {
struct PolyMat2 {
  std::array<IntPoly, 4> m;  // row major: a b / c d

  static PolyMat2 identity() {
    PolyMat2 r;
    r.m[0] = IntPoly::constant(BigInt(1));
    r.m[3] = IntPoly::constant(BigInt(1));
    return r;
  }
  friend PolyMat2 operator*(const PolyMat2& x, const PolyMat2& y) {
    PolyMat2 r;
    r.m[0] = x.m[0] * y.m[0] + x.m[1] * y.m[2];
    r.m[1] = x.m[0] * y.m[1] + x.m[1] * y.m[3];
    r.m[2] = x.m[2] * y.m[0] + x.m[3] * y.m[2];
    r.m[3] = x.m[2] * y.m[1] + x.m[3] * y.m[3];
    return r;
  }
};

/// Images of the four letters under rho(a) = [[1,1],[0,1]],
/// rho(b) = [[1,0],[w,1]] and their inverses, entries in Z[w].
inline PolyMat2 letter_matrix(Letter l) {
  const IntPoly one = IntPoly::constant(BigInt(1));
  const IntPoly w = IntPoly::variable();
  PolyMat2 r;
  if (l.gen() == 0) {
    r.m[0] = one;
    r.m[1] = IntPoly::constant(BigInt(l.exp()));
    r.m[3] = one;
  } else {
    r.m[0] = one;
    r.m[2] = l.exp() > 0 ? w : IntPoly::constant(BigInt(0)) - w;
    r.m[3] = one;
  }
  return r;
}
}  // namespace detail

/// tr rho(u_r) as an exact integer polynomial in w.
inline IntPoly trace_polynomial(const Slope& r) {
  Word u = riley_word(r).word;
  detail::PolyMat2 acc = detail::PolyMat2::identity();
  for (Letter l : u.letters) acc = acc * detail::letter_matrix(l);
  return acc.m[0] + acc.m[3];
}

// ---------------------------------------------------------------------------
// Root finding: companion-matrix eigenvalues, polished by Newton iterations
// in extended precision.
// ---------------------------------------------------------------------------

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;

namespace detail {
inline lcplx horner(const std::vector<long double>& coeffs, lcplx x) {
  lcplx acc{0.0L, 0.0L};
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}
}  // namespace detail

/// All complex roots (with multiplicity) of sum coeffs[i] x^i, coeffs real.
inline std::vector<cplx> poly_roots(const std::vector<double>& coeffs_in) {
  std::vector<double> c = coeffs_in;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.size() <= 1) throw error("poly_roots: degree must be >= 1");
  const size_t deg = c.size() - 1;

  Eigen::MatrixXcd companion(deg, deg);
  companion.setZero();
  for (size_t i = 0; i + 1 < deg; ++i) companion(i + 1, i) = 1.0;
  for (size_t i = 0; i < deg; ++i) companion(i, deg - 1) = -c[i] / c[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw error("poly_roots: eigensolver failed");

  std::vector<long double> lc(c.begin(), c.end());
  std::vector<long double> ld(deg);  // derivative
  for (size_t i = 1; i <= deg; ++i) ld[i - 1] = static_cast<long double>(i) * lc[i];

  std::vector<cplx> roots;
  roots.reserve(deg);
  for (size_t i = 0; i < deg; ++i) {
    lcplx z(solver.eigenvalues()[static_cast<long>(i)].real(),
            solver.eigenvalues()[static_cast<long>(i)].imag());
    for (int it = 0; it < 40; ++it) {
      lcplx f = detail::horner(lc, z);
      lcplx df = detail::horner(ld, z);
      if (std::abs(df) == 0.0L) break;
      lcplx step = f / df;
      z -= step;
      if (std::abs(step) < 1e-30L * (1.0L + std::abs(z))) break;
    }
    roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  std::sort(roots.begin(), roots.end(), [](const cplx& x, const cplx& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return roots;
}

// ---------------------------------------------------------------------------
// Parabolic representations
// ---------------------------------------------------------------------------

struct ParabolicRepresentation {
  cplx omega{};
  long long n = 0;
  double target_trace = 0.0;    // 2 cos(pi/n)
  double residual = 0.0;        // |tr rho(u_r) - target|
  double power_residual = 0.0;  // || rho(u_r)^n -+ I ||_max
};

namespace detail {
struct CMat2 {
  std::array<lcplx, 4> m{lcplx(1, 0), lcplx(0, 0), lcplx(0, 0), lcplx(1, 0)};

  friend CMat2 operator*(const CMat2& x, const CMat2& y) {
    CMat2 r;
    r.m[0] = x.m[0] * y.m[0] + x.m[1] * y.m[2];
    r.m[1] = x.m[0] * y.m[1] + x.m[1] * y.m[3];
    r.m[2] = x.m[2] * y.m[0] + x.m[3] * y.m[2];
    r.m[3] = x.m[2] * y.m[1] + x.m[3] * y.m[3];
    return r;
  }
};

inline CMat2 rep_letter(Letter l, lcplx omega) {
  CMat2 r;
  if (l.gen() == 0) {
    r.m[1] = lcplx(static_cast<long double>(l.exp()), 0.0L);
  } else {
    r.m[2] = l.exp() > 0 ? omega : -omega;
  }
  return r;
}

inline CMat2 rep_word(const Word& w, lcplx omega) {
  CMat2 acc;
  for (Letter l : w.letters) acc = acc * rep_letter(l, omega);
  return acc;
}
}  // namespace detail

/// Numeric 2x2 image of a word at a given omega.
inline std::array<cplx, 4> representation_matrix(const Word& w, cplx omega) {
  auto m = detail::rep_word(w, lcplx(omega.real(), omega.imag()));
  return {cplx(static_cast<double>(m.m[0].real()), static_cast<double>(m.m[0].imag())),
          cplx(static_cast<double>(m.m[1].real()), static_cast<double>(m.m[1].imag())),
          cplx(static_cast<double>(m.m[2].real()), static_cast<double>(m.m[2].imag())),
          cplx(static_cast<double>(m.m[3].real()), static_cast<double>(m.m[3].imag()))};
}

inline cplx trace_of_word(const Word& w, cplx omega) {
  auto m = detail::rep_word(w, lcplx(omega.real(), omega.imag()));
  lcplx t = m.m[0] + m.m[3];
  return cplx(static_cast<double>(t.real()), static_cast<double>(t.imag()));
}

/// tr rho(u_s); comparisons must treat the value up to sign, since relator
/// insertions flip the sign of a trace in these representations.
inline cplx trace_of_slope(const Slope& s, const ParabolicRepresentation& rep) {
  return trace_of_word(riley_word(s).word, rep.omega);
}

/// Solves tr rho(u_r) = 2 cos(pi/n) and keeps every root that passes the
/// residual checks; each root gives a homomorphism with rho(u_r) elliptic of
/// order n up to sign.
inline std::vector<ParabolicRepresentation> solve_representations(const Slope& r,
                                                                  long long n,
                                                                  double tol = 1e-10) {
  if (n < 2) throw error("solve_representations: n >= 2 required");
  IntPoly tr = trace_polynomial(r);
  const double target = 2.0 * std::cos(M_PI / static_cast<double>(n));
  std::vector<double> coeffs;
  coeffs.reserve(tr.coeffs.size());
  for (const auto& c : tr.coeffs) coeffs.push_back(c.to_double());
  if (coeffs.empty()) throw error("solve_representations: constant trace polynomial");
  coeffs[0] -= target;

  Word u = riley_word(r).word;
  std::vector<ParabolicRepresentation> reps;
  for (cplx root : poly_roots(coeffs)) {
    ParabolicRepresentation rep;
    rep.omega = root;
    rep.n = n;
    rep.target_trace = target;
    rep.residual = std::abs(trace_of_word(u, root) - cplx(target, 0.0));

    auto um = detail::rep_word(u, lcplx(root.real(), root.imag()));
    detail::CMat2 pw;
    for (long long i = 0; i < n; ++i) pw = pw * um;
    long double plus = 0.0L, minus = 0.0L;
    for (int i = 0; i < 4; ++i) {
      lcplx id = (i == 0 || i == 3) ? lcplx(1.0L, 0.0L) : lcplx(0.0L, 0.0L);
      plus = std::max(plus, std::abs(pw.m[i] - id));
      minus = std::max(minus, std::abs(pw.m[i] + id));
    }
    rep.power_residual = static_cast<double>(std::min(plus, minus));
    if (rep.residual <= tol) reps.push_back(rep);
  }
  if (reps.empty()) throw error("solve_representations: no root met the tolerance");
  return reps;
}

// ---------------------------------------------------------------------------
// Trace certificates
// ---------------------------------------------------------------------------

enum class CertKind { non_conjugate, non_peripheral, non_torsion };

inline const char* to_string(CertKind k) {
  switch (k) {
    case CertKind::non_conjugate: return "non-conjugate";
    case CertKind::non_peripheral: return "non-peripheral";
    case CertKind::non_torsion: return "non-torsion";
  }
  return "?";
}

struct TraceCertificate {
  CertKind kind{};
  std::vector<Slope> slopes;
  size_t rep_index = 0;       // which representation separated
  cplx omega{};               // its omega
  std::vector<cplx> traces;   // the traces entering the margin
  double margin = 0.0;
};

namespace detail {
// distance between {t, -t} and {u, -u}
inline double sign_free_distance(cplx t, cplx u) {
  return std::min(std::abs(t - u), std::abs(t + u));
}
}  // namespace detail

/// Certificate that u_s and u_s' are non-conjugate: some representation
/// separates their traces up to sign. Margins below 10*tol are treated as
/// inconclusive, never as evidence.
inline std::optional<TraceCertificate> certify_non_conjugate(
    const Slope& s, const Slope& s_prime, const std::vector<ParabolicRepresentation>& reps,
    double tol = 1e-8) {
  std::optional<TraceCertificate> best;
  for (size_t i = 0; i < reps.size(); ++i) {
    cplx t = trace_of_slope(s, reps[i]);
    cplx u = trace_of_slope(s_prime, reps[i]);
    double margin = detail::sign_free_distance(t, u);
    if (margin > 10.0 * tol && (!best || margin > best->margin)) {
      TraceCertificate cert;
      cert.kind = CertKind::non_conjugate;
      cert.slopes = {s, s_prime};
      cert.rep_index = i;
      cert.omega = reps[i].omega;
      cert.traces = {t, u};
      cert.margin = margin;
      best = cert;
    }
  }
  return best;
}

/// Certificate that alpha_s is not peripheral: powers of a meridian have
/// trace with |tr| = 2 in every representation here, so ||tr| - 2| > 0
/// separates.
inline std::optional<TraceCertificate> certify_non_peripheral(
    const Slope& s, const std::vector<ParabolicRepresentation>& reps, double tol = 1e-8) {
  std::optional<TraceCertificate> best;
  for (size_t i = 0; i < reps.size(); ++i) {
    cplx t = trace_of_slope(s, reps[i]);
    double margin = std::abs(std::abs(t) - 2.0);
    if (margin > 10.0 * tol && (!best || margin > best->margin)) {
      TraceCertificate cert;
      cert.kind = CertKind::non_peripheral;
      cert.slopes = {s};
      cert.rep_index = i;
      cert.omega = reps[i].omega;
      cert.traces = {t};
      cert.margin = margin;
      best = cert;
    }
  }
  return best;
}

/// Certificate that alpha_s is not torsion: torsion classes land on traces
/// +-2cos(k pi / n); staying away from all of them separates.
inline std::optional<TraceCertificate> certify_non_torsion(
    const Slope& s, const std::vector<ParabolicRepresentation>& reps, double tol = 1e-8) {
  std::optional<TraceCertificate> best;
  for (size_t i = 0; i < reps.size(); ++i) {
    cplx t = trace_of_slope(s, reps[i]);
    double margin = std::numeric_limits<double>::infinity();
    for (long long k = 0; k <= reps[i].n; ++k) {
      cplx torsion_trace(2.0 * std::cos(M_PI * static_cast<double>(k) /
                                        static_cast<double>(reps[i].n)),
                         0.0);
      margin = std::min(margin, detail::sign_free_distance(t, torsion_trace));
    }
    if (margin > 10.0 * tol && (!best || margin > best->margin)) {
      TraceCertificate cert;
      cert.kind = CertKind::non_torsion;
      cert.slopes = {s};
      cert.rep_index = i;
      cert.omega = reps[i].omega;
      cert.traces = {t};
      cert.margin = margin;
      best = cert;
    }
  }
  return best;
}

}  // namespace heckoid
