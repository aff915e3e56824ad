// Classifies a handful of slopes in one quotient and prints the verdicts.

#include <cstdio>

#include "heckoid/decide.hpp"

int main() {
  using namespace heckoid;
  auto ctx = HeckoidContext::make(Rational(3, 10), 2);
  std::printf("context r=%s n=%lld, I = [0,%s) u [%s,1]\n", ctx.r.str().c_str(), ctx.n,
              ctx.intervals.a.str().c_str(), ctx.intervals.b.str().c_str());
  const Rational samples[] = {Rational(1, 4),  Rational(7, 4),   Rational(3, 10),
                              Rational(-7, 3), Rational::infinity()};
  for (const Rational& s : samples) {
    LoopClass cls = classify(s, ctx);
    std::printf("  %8s -> %-12s (normalized %s, %lld steps)\n", s.str().c_str(),
                to_string(cls.kind), cls.normalized.str().c_str(), cls.norm.steps);
  }
  return 0;
}
