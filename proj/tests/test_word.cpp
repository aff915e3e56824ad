#include <doctest.h>

#include "heckoid/presentation.hpp"
#include "heckoid/word.hpp"
#include "support/generators.hpp"

using namespace heckoid;

TEST_CASE("free reduction") {
  CHECK(free_reduce(parse_letters("abBA")).empty());
  CHECK(free_reduce(parse_letters("abbBA")).str() == "abA");
  CHECK(free_reduce(parse_letters("abBa")).str() == "aa");
  CHECK(free_reduce(parse_letters("")).empty());
  CHECK(free_reduce(parse_letters("abAaB")).str() == "a");
  CHECK_THROWS_AS(parse_letters("abc"), error);
  CHECK_THROWS_AS(word_from_string("aA"), error);
}

TEST_CASE("free reduction properties") {
  testing::Rng rng(11);
  for (int i = 0; i < 3000; ++i) {
    auto raw = rng.raw_letters(rng.uniform(0, 40));
    Word w = free_reduce(raw);
    CHECK(is_reduced(std::span<const Letter>(w.letters.data(), w.letters.size())));
    // reducing again changes nothing
    CHECK(free_reduce(w.letters) == w);
    // w^{-1} w reduces to empty
    Word inv = w.inverse();
    CHECK(concat_reduced(inv, w).empty());
  }
}

TEST_CASE("cyclic words and rotation invariance") {
  Word w = word_from_string("abAB");
  CyclicWord cw(w);
  for (size_t k = 0; k < w.size(); ++k) CHECK(CyclicWord(rotate_word(w, k)) == cw);
  CHECK(CyclicWord(word_from_string("ab")) != CyclicWord(word_from_string("aB")));
  CHECK_THROWS_AS(CyclicWord(word_from_string("abA")), error);

  testing::Rng rng(12);
  for (int i = 0; i < 2000; ++i) {
    Word v = rng.reduced_word(rng.uniform(1, 24));
    if (!is_cyclically_reduced(v)) continue;
    CyclicWord cv(v);
    size_t k = static_cast<size_t>(rng.uniform(0, static_cast<long long>(v.size()) - 1));
    CHECK(CyclicWord(rotate_word(v, k)) == cv);
  }
}

TEST_CASE("cyclic reduce splits off a conjugator") {
  testing::Rng rng(13);
  for (int i = 0; i < 2000; ++i) {
    Word w = rng.reduced_word(rng.uniform(0, 30));
    Word conj;
    Word core = cyclic_reduce(w, &conj);
    CHECK(is_cyclically_reduced(core));
    CHECK(concat_reduced(concat_reduced(conj, core), conj.inverse()) == w);
  }
}

TEST_CASE("s-sequences") {
  CHECK(s_sequence(word_from_string("abaBAB")) == Seq{3, 3});
  CHECK(s_sequence(word_from_string("a")) == Seq{1});
  CHECK_THROWS_AS(s_sequence(Word{}), error);

  // u_{10/37} has a 20-run sequence with the (S1,S2,S1,S2) repetition
  Seq expected{4, 4, 4, 3, 4, 4, 3, 4, 4, 3, 4, 4, 4, 3, 4, 4, 3, 4, 4, 3};
  CHECK(s_sequence(riley_word(Rational(10, 37)).word) == expected);
}

TEST_CASE("cyclic s-sequences") {
  CHECK(cyclic_s_sequence(CyclicWord(riley_word(Rational(1, 3)).word)) ==
        CyclicSeq(Seq{3, 3}));
  CHECK(cyclic_s_sequence(CyclicWord(word_from_string("aB"))) == CyclicSeq(Seq{1, 1}));
  CHECK(cyclic_s_sequence(CyclicWord(word_from_string("abaB"))) == CyclicSeq(Seq{3, 1}));
  // u_{0/1} = ab has a single sign: distinct error
  CHECK_THROWS_AS(cyclic_s_sequence(CyclicWord(word_from_string("ab"))), error);

  // rotation invariance of the cyclic s-sequence
  testing::Rng rng(14);
  for (int i = 0; i < 1000; ++i) {
    Word v = rng.reduced_word(rng.uniform(2, 30));
    if (!is_cyclically_reduced(v)) continue;
    bool has_pos = false, has_neg = false;
    for (Letter l : v.letters) (l.exp() > 0 ? has_pos : has_neg) = true;
    if (!has_pos || !has_neg) continue;
    auto base = cyclic_s_sequence(CyclicWord(v));
    size_t k = static_cast<size_t>(rng.uniform(0, static_cast<long long>(v.size()) - 1));
    CHECK(cyclic_s_sequence(CyclicWord(rotate_word(v, k))) == base);
    // runs alternate sign around the cycle, so their count is even
    CHECK(base.size() % 2 == 0);
    // sum of runs = word length
    long long total = 0;
    for (long long e : base.vals) total += e;
    CHECK(total == static_cast<long long>(v.size()));
  }
}

TEST_CASE("alternating words") {
  CHECK(is_alternating(word_from_string("abAB")));
  CHECK_FALSE(is_alternating(word_from_string("aab")));
  CHECK(is_cyclically_alternating(CyclicWord(riley_word(Rational(2, 9)).word)));
  CHECK(is_cyclically_alternating(CyclicWord(word_from_string("abaB"))));
  CHECK(is_alternating(word_from_string("aba")));
  CHECK_FALSE(is_cyclically_alternating(CyclicWord(word_from_string("aba"))));
  // alternation agrees with a generator-parity scan letter by letter
  testing::Rng rng(15);
  for (int i = 0; i < 2000; ++i) {
    Word v = rng.reduced_word(rng.uniform(1, 20));
    bool by_scan = true;
    for (size_t j = 0; j + 1 < v.size(); ++j)
      by_scan = by_scan && v.letters[j].gen() != v.letters[j + 1].gen();
    CHECK(by_scan == is_alternating(v));
  }
}

TEST_CASE("contains_subsequence without leap") {
  CyclicSeq cs(Seq{3, 2, 2, 3, 2, 2});
  CHECK(contains_subsequence(cs, Seq{2, 3, 2}));
  CHECK_FALSE(contains_subsequence(cs, Seq{3, 3}));
  CHECK(contains_subsequence(CyclicSeq(Seq{5, 5}), Seq{5}));
  // patterns longer than the cycle never match
  CHECK_FALSE(contains_subsequence(CyclicSeq(Seq{5, 5}), Seq{5, 5, 5}));
  CHECK_THROWS_AS(contains_subsequence(cs, Seq{}), error);
}

TEST_CASE("block occurrence counting") {
  CyclicSeq cs(Seq{4, 4, 4, 3, 4, 4, 3, 4, 4, 3, 4, 4, 4, 3, 4, 4, 3, 4, 4, 3});
  CHECK(count_block_occurrences(cs, Seq{4, 4, 4}) == 2);
  CHECK(count_block_occurrences(cs, Seq{3, 4, 4, 3, 4, 4, 3}) == 2);
}
