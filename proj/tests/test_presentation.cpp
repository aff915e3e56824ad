#include <doctest.h>

#include <numeric>

#include "heckoid/presentation.hpp"

using namespace heckoid;

TEST_CASE("riley words at the degenerate slopes") {
  CHECK(riley_word(Rational(0, 1)).word.str() == "ab");
  CHECK(riley_word(Rational(1, 1)).word.str() == "aB");
  CHECK(riley_word(Rational::infinity()).word.empty());
  CHECK_THROWS_AS(riley_word(Rational(3, 2)), error);
  CHECK_THROWS_AS(riley_word(Rational(-1, 3)), error);
}

TEST_CASE("riley words, hand-checked small slopes") {
  CHECK(riley_word(Rational(1, 2)).word.str() == "abAB");
  CHECK(riley_word(Rational(1, 3)).word.str() == "abaBAB");
  CHECK(riley_word(Rational(1, 2)).hat.str() == "b");
}

TEST_CASE("riley word structural invariants, denominators <= 200") {
  for (long long p = 2; p <= 200; ++p) {
    for (long long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      Word u = riley_word(Rational(q, p)).word;
      REQUIRE(u.size() == static_cast<size_t>(2 * p));
      REQUIRE(is_cyclically_reduced(u));
      REQUIRE(is_cyclically_alternating(CyclicWord(u)));
      // CS(r) has 2q entries summing to 2p
      CyclicSeq cs = slope_cyclic_s_sequence(Rational(q, p));
      REQUIRE(cs.size() == static_cast<size_t>(2 * q));
      long long total = 0;
      for (long long e : cs.vals) total += e;
      REQUIRE(total == 2 * p);
    }
  }
}

TEST_CASE("slope s-sequences from the worked examples") {
  CHECK(slope_s_sequence(Rational(10, 37)) ==
        Seq{4, 4, 4, 3, 4, 4, 3, 4, 4, 3, 4, 4, 4, 3, 4, 4, 3, 4, 4, 3});
  CHECK(slope_s_sequence(Rational(8, 35)) ==
        Seq{5, 4, 5, 4, 4, 5, 4, 4, 5, 4, 5, 4, 4, 5, 4, 4});
  CHECK(s_sequence(riley_word(Rational(10, 37)).hat) == Seq{3, 4, 4, 3, 4, 4, 3, 4, 4, 3});
  CHECK(s_sequence(riley_word(Rational(8, 35)).hat) == Seq{4, 4, 5, 4, 4, 5, 4, 4});
  for (long long m = 1; m <= 12; ++m)
    CHECK(slope_s_sequence(Rational(1, m)) == Seq{m, m});
}

TEST_CASE("t-sequences") {
  CHECK(t_sequence(Rational(10, 37)) == Seq{3, 2, 2, 3, 2, 2});
  CHECK(t_sequence(Rational(8, 35)) == Seq{1, 2, 2, 1, 2, 2});
  CHECK(t_sequence(from_continued_fraction(ContinuedFraction{{2, 5}})) == Seq{4, 4});
  CHECK_THROWS_AS(t_sequence(Rational(1, 5)), error);
}

TEST_CASE("reduced slope") {
  CHECK(to_continued_fraction(reduced_slope(from_continued_fraction(
            ContinuedFraction{{2, 5}}))).terms == std::vector<long long>{4});
  CHECK(to_continued_fraction(reduced_slope(from_continued_fraction(
            ContinuedFraction{{2, 1, 5}}))).terms == std::vector<long long>{5});
  CHECK(to_continued_fraction(reduced_slope(Rational(10, 37))).terms ==
        std::vector<long long>{2, 3});
  CHECK_THROWS_AS(reduced_slope(Rational(1, 7)), error);
}

TEST_CASE("CS(r~) = CT(r) on the worked examples") {
  CHECK(slope_cyclic_s_sequence(reduced_slope(Rational(10, 37))) ==
        CyclicSeq(t_sequence(Rational(10, 37))));
  CHECK(slope_cyclic_s_sequence(reduced_slope(Rational(8, 35))) ==
        CyclicSeq(t_sequence(Rational(8, 35))));
}

TEST_CASE("s1/s2 decomposition golden values") {
  auto d1 = s1_s2_decomposition(Rational(10, 37));
  CHECK(d1.s1 == Seq{4, 4, 4});
  CHECK(d1.s2 == Seq{3, 4, 4, 3, 4, 4, 3});
  auto d2 = s1_s2_decomposition(Rational(8, 35));
  CHECK(d2.s1 == Seq{5, 4, 5});
  CHECK(d2.s2 == Seq{4, 4, 5, 4, 4});
  auto d3 = s1_s2_decomposition(Rational(1, 6));
  CHECK(d3.s1.empty());
  CHECK(d3.s2 == Seq{6});
  // [2,1,5]: S1 = five 3s, S2 = (2); [2,5]: S1 = (3), S2 = four 2s
  auto d4 = s1_s2_decomposition(from_continued_fraction(ContinuedFraction{{2, 1, 5}}));
  CHECK(d4.s1 == Seq{3, 3, 3, 3, 3});
  CHECK(d4.s2 == Seq{2});
  auto d5 = s1_s2_decomposition(from_continued_fraction(ContinuedFraction{{2, 5}}));
  CHECK(d5.s1 == Seq{3});
  CHECK(d5.s2 == Seq{2, 2, 2, 2});
  CHECK_THROWS_AS(s1_s2_decomposition(Rational(0, 1)), error);
  CHECK_THROWS_AS(s1_s2_decomposition(Rational(1, 1)), error);
  CHECK_THROWS_AS(s1_s2_decomposition(Rational::infinity()), error);
}

TEST_CASE("recursion path agrees with the direct split") {
  auto r1 = s1_s2_via_recursion(Rational(10, 37));
  CHECK(r1.s1 == Seq{4, 4, 4});
  CHECK(r1.s2 == Seq{3, 4, 4, 3, 4, 4, 3});
  auto r2 = s1_s2_via_recursion(Rational(8, 35));
  CHECK(r2.s1 == Seq{5, 4, 5});
  CHECK(r2.s2 == Seq{4, 4, 5, 4, 4});
}

TEST_CASE("recover_slope") {
  CHECK(recover_slope(slope_cyclic_s_sequence(Rational(10, 37))) == Rational(10, 37));
  CHECK(recover_slope(slope_cyclic_s_sequence(Rational(8, 35))) == Rational(8, 35));
  CHECK(recover_slope(CyclicSeq(Seq{7, 7})) == Rational(1, 7));
  CHECK_THROWS_AS(recover_slope(CyclicSeq(Seq{2})), error);
  CHECK_THROWS_AS(recover_slope(CyclicSeq(Seq{1, 2, 3, 4})), error);
}

TEST_CASE("recover_slope round-trips CS(r) for all denominators <= 40") {
  for (long long p = 2; p <= 40; ++p) {
    for (long long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      Rational r(q, p);
      REQUIRE(recover_slope(slope_cyclic_s_sequence(r)) == r);
    }
  }
}

TEST_CASE("upper presentation relator") {
  auto pres = make_presentation(Rational(1, 2), 2);
  CHECK(pres.relator.str() == "abABabAB");
  CHECK(make_presentation(Rational(1, 3), 2).relator.size() == 12);
  CHECK_THROWS_AS(make_presentation(Rational(0, 1), 2), error);
  CHECK_THROWS_AS(make_presentation(Rational(1, 2), 1), error);
}

TEST_CASE("corollary patterns") {
  auto c1 = check_corollary_patterns(from_continued_fraction(ContinuedFraction{{2, 1, 5}}));
  CHECK(c1.m2 == 1);
  CHECK(c1.found);
  auto c2 = check_corollary_patterns(from_continued_fraction(ContinuedFraction{{2, 5}}));
  CHECK(c2.m2 == 5);
  CHECK_FALSE(c2.exempt);
  CHECK(c2.found);
  auto c3 = check_corollary_patterns(from_continued_fraction(ContinuedFraction{{3, 2}}));
  CHECK(c3.exempt);  // r = [m,2] = 2/(2m+1)
  CHECK_FALSE(c3.found);
  CHECK_THROWS_AS(check_corollary_patterns(Rational(1, 4)), error);
}
