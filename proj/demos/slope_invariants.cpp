// Prints the word, sequence invariants and block decomposition of one slope.

#include <cstdio>

#include "heckoid/presentation.hpp"

int main() {
  using namespace heckoid;
  Rational r(10, 37);
  SlopeWord sw = riley_word(r);
  std::printf("slope        %s  (cf %s)\n", r.str().c_str(),
              to_continued_fraction(r).str().c_str());
  std::printf("u_r          %s\n", sw.word.str().c_str());
  std::printf("S(r)         %s\n", seq_str(slope_s_sequence(r)).c_str());
  std::printf("T(r)         %s\n", seq_str(t_sequence(r)).c_str());
  SlopeDecomposition d = s1_s2_decomposition(r);
  std::printf("S1, S2       %s, %s\n", seq_str(d.s1).c_str(), seq_str(d.s2).c_str());
  Rational back = recover_slope(slope_cyclic_s_sequence(r));
  std::printf("recovered    %s\n", back.str().c_str());
  return back == r ? 0 : 1;
}
