#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "richwords/pal_index.hpp"

using namespace richwords;

namespace {

Word W(const char* s) { return parse_digits(s); }

std::vector<bool> flags(const Word& w, std::size_t q = 2) {
  PalIndex ix(q);
  std::vector<bool> out;
  for (Symbol x : w) out.push_back(ix.append(x));
  return out;
}

}  // namespace

TEST(PalIndexAppend, Flags) {
  EXPECT_EQ(flags(W("011")), (std::vector<bool>{true, true, true}));
  EXPECT_EQ(flags(W("0110")), (std::vector<bool>(4, true)));
  // 001011010 is rich, so every flag is set.
  EXPECT_EQ(flags(W("001011010")), (std::vector<bool>(9, true)));
  EXPECT_EQ(flags(W("001011010")), oracle::unioccurrent_lps_flags(W("001011010")));
  EXPECT_EQ(flags(W("200101100"), 3).back(), false);
}

TEST(PalIndexAppend, RejectsUnknownSymbol) {
  PalIndex ix(2);
  EXPECT_THROW(ix.append(2), std::invalid_argument);
}

TEST(PalIndexCount, Examples) {
  EXPECT_EQ(PalIndex(2).distinct_palindromes(), 1u);
  EXPECT_EQ(PalIndex(2, W("0110")).distinct_palindromes(), 5u);
  const PalIndex ix(2, W("011"));
  EXPECT_EQ(ix.distinct_palindromes(), 4u);
  EXPECT_TRUE(ix.rich());
}

TEST(PalIndexRollback, Examples) {
  PalIndex ix(2, W("0110"));
  const PalIndex before = ix;
  ix.append(1);
  ix.rollback(1);
  EXPECT_EQ(ix, before);

  PalIndex five(2);
  for (Symbol x : W("01101")) five.append(x);
  five.rollback(5);
  EXPECT_EQ(five, PalIndex(2));
  EXPECT_THROW(five.rollback(1), std::invalid_argument);
}

TEST(PalIndexRollback, ExhaustiveAgainstFreshBuild) {
  for (std::size_t n = 1; n <= 10; ++n) {
    oracle::all_words(n, 2, [&](const Word& w) {
      PalIndex ix(2);
      for (std::size_t i = 0; i < n; ++i) {
        ix.append(w[i]);
        ix.append(static_cast<Symbol>(1 - w[i]));
        ix.append(w[i]);
        ix.rollback(2);
      }
      ASSERT_EQ(ix, PalIndex(2, w));
      for (std::size_t k = n; k > 0; --k) {
        ix.rollback(1);
        ASSERT_EQ(ix, PalIndex(2, w.substr(0, k - 1)));
      }
    });
  }
}

TEST(PalIndexRichness, ExhaustiveFlagsCharacteriseRichness) {
  for (std::size_t n = 1; n <= 14; ++n) {
    oracle::all_words(n, 2, [&](const Word& w) {
      PalIndex ix(2);
      bool all = true;
      for (Symbol x : w) all = ix.append(x) && all;
      ASSERT_EQ(all, ix.rich());
      ASSERT_EQ(ix.rich(), ix.distinct_palindromes() == n + 1);
    });
  }
}

TEST(PalIndexRandom, CountsAndFlagsMatchNaive) {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t q = 2 + static_cast<std::size_t>(trial % 3);
    const Word w = oracle::random_word(rng, 200, q);
    const PalIndex ix(q, w);
    ASSERT_EQ(ix.distinct_palindromes(), oracle::palindromic_factors(w).size());
    ASSERT_EQ(ix.lps_length(), oracle::lps(w).size());
    ASSERT_EQ(flags(w, q), oracle::unioccurrent_lps_flags(w));
  }
}

TEST(PalIndexQueries, LppsAndStandardLetter) {
  const PalIndex ix(4, W("010200330"));
  EXPECT_EQ(ix.lps_length(), 4u);
  EXPECT_EQ(ix.lpps_length(), 4u);
  EXPECT_EQ(ix.right_standard_letter(), 0);
  PalIndex probe(2, W("20010110").substr(1));
  EXPECT_EQ(probe.lpps_length(), oracle::lpps(W("0010110")).size());
  const PalIndex copy = probe;
  probe.probe(1);
  EXPECT_EQ(probe, copy);
}
