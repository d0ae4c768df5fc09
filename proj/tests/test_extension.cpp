#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "richwords/extension.hpp"
#include "richwords/richness.hpp"

using namespace richwords;

namespace {

Word W(const char* s) { return parse_digits(s); }

const Alphabet kBinary = Alphabet::standard(2);
const Alphabet kTernary = Alphabet::standard(3);

}  // namespace

TEST(StdExt, Examples) {
  const Word w = W("010200330");
  EXPECT_EQ(std_ext(w, Side::right, 1), W("0102003300"));
  EXPECT_EQ(std_ext(w, Side::right, 7), W("0102003300201020"));
  EXPECT_EQ(std_ext(w, Side::left, 1), W("2010200330"));
  EXPECT_EQ(std_ext(w, Side::right, 0), w);
  EXPECT_THROW(std_ext(Word{}, Side::right, 1), std::invalid_argument);
  EXPECT_THROW(std_ext(W("200101100"), Side::right, 1), std::invalid_argument);
}

TEST(FlexedPoints, Examples) {
  EXPECT_TRUE(flexed_points(W("00")).empty());
  EXPECT_EQ(flexed_points(W("01")), (WordSet{W("01")}));
  EXPECT_THROW(flexed_points(W("0")), std::invalid_argument);
  const WordSet expected{W("20"),         W("201"),         W("20101"),          W("201011"),
                         W("201011011"),  W("2010110111"),  W("20101101110111"), W("201011011101111")};
  EXPECT_EQ(flexed_points(W("2010110111011110111")), expected);
}

TEST(TwoWay, Examples) {
  EXPECT_TRUE(two_way_extendable(W("00101"), kTernary));
  EXPECT_FALSE(two_way_extendable(W("20010110"), kTernary));
  EXPECT_TRUE(two_way_extendable(W("1"), kBinary));
}

TEST(Omega, Examples) {
  EXPECT_EQ(omega(W("00101"), kBinary).omega, 0u);
  EXPECT_EQ(omega(W("0"), kBinary).omega, 0u);
  const auto trace = omega(W("201011011101111011111001"), kTernary);
  ASSERT_TRUE(trace.omega.has_value());
  EXPECT_EQ(*trace.omega, 4u);
  EXPECT_EQ(trace.path(), W("1111"));
  for (const auto& step : trace.steps) EXPECT_TRUE(step.forced);
  ASSERT_TRUE(trace.branch_witness.has_value());
  EXPECT_NE(trace.branch_witness->first, trace.branch_witness->second);
  const auto cut = omega(W("201011011101111011111001"), kTernary, 2);
  EXPECT_TRUE(cut.exceeded_budget());
  EXPECT_EQ(cut.path(), W("11"));
  EXPECT_THROW(omega(Word{}, kBinary), std::invalid_argument);
}

TEST(UniqueRichExtension, Examples) {
  EXPECT_TRUE(unique_rich_extension(W("20010110"), W("1"), kTernary));
  EXPECT_TRUE(unique_rich_extension(W("201011011101111011111001"), W("1111"), kTernary));
  EXPECT_FALSE(unique_rich_extension(W("00101"), W("0"), kBinary));
  EXPECT_THROW(unique_rich_extension(W("0"), Word{}, kBinary), std::invalid_argument);
}

TEST(GammaCheck, Examples) {
  // lpps(20010110) = 0110, not 0.
  EXPECT_FALSE(gamma_check(W("2001011"), W("0"), W("1"), kTernary));
  EXPECT_TRUE(gamma_check(W("2001"), W("0110"), W("1"), kTernary));
  EXPECT_FALSE(gamma_check(W("0010"), W("0"), W("1"), kBinary));
  EXPECT_THROW(gamma_check(Word{}, W("0"), W("1"), kBinary), std::invalid_argument);
}

TEST(ExtensionExhaustive, StdExtRichAndMirror) {
  for (std::size_t n = 1; n <= 12; ++n) {
    oracle::all_words(n, 2, [](const Word& w) {
      if (!oracle::rich(w)) return;
      Word right = w;
      for (std::size_t j = 1; j <= 8; ++j) {
        right = oracle::std_ext_right(right);
        ASSERT_EQ(std_ext(w, Side::right, j), right);
        ASSERT_TRUE(rich(right));
        const Word left = std_ext(w, Side::left, j);
        ASSERT_TRUE(rich(left));
        ASSERT_EQ(left, reverse(std_ext(reverse(w), Side::right, j)));
      }
    });
  }
}

TEST(ExtensionExhaustive, ForcedStepIsStandard) {
  for (std::size_t n = 1; n <= 12; ++n) {
    oracle::all_words(n, 2, [](const Word& w) {
      if (!oracle::rich(w)) return;
      const auto letters = oracle::rich_letters(w, 2);
      ASSERT_EQ(letters, rich_extension_letters(w, kBinary));
      if (letters.size() == 1) ASSERT_EQ(w + letters[0], std_ext(w, Side::right, 1));
    });
  }
}

TEST(ExtensionExhaustive, OmegaBoundedByLength) {
  for (std::size_t q = 2; q <= 3; ++q) {
    const Alphabet a = Alphabet::standard(q);
    const std::size_t max_n = q == 2 ? 14 : 9;
    for (std::size_t n = 1; n <= max_n; ++n) {
      oracle::all_words(n, q, [&](const Word& w) {
        if (!rich(w)) return;
        const auto trace = omega(w, a);
        ASSERT_TRUE(trace.omega.has_value());
        ASSERT_LE(*trace.omega, n);
      });
    }
  }
}

TEST(ExtensionExhaustive, OmegaMatchesBruteForce) {
  for (std::size_t n = 1; n <= 9; ++n) {
    oracle::all_words(n, 2, [n](const Word& w) {
      if (!oracle::rich(w)) return;
      const auto brute = oracle::brute_omega(w, 2, n);
      ASSERT_TRUE(brute.has_value());
      const auto trace = omega(w, kBinary);
      ASSERT_EQ(trace.omega, brute->first);
      ASSERT_EQ(trace.path(), brute->second);
    });
  }
  const auto brute = oracle::brute_omega(W("201011011101111011111001"), 3, 5);
  ASSERT_TRUE(brute.has_value());
  EXPECT_EQ(brute->first, 4u);
  EXPECT_EQ(brute->second, W("1111"));
}

TEST(ExtensionExhaustive, FlexedPointsMatchDefinition) {
  for (std::size_t n = 2; n <= 12; ++n) {
    oracle::all_words(n, 2, [](const Word& v) {
      if (!oracle::rich(v)) return;
      WordSet expected;
      for (std::size_t i = 1; i < v.size(); ++i) {
        if (oracle::std_ext_right(v.substr(0, i)) != v.substr(0, i + 1)) expected.insert(v.substr(0, i + 1));
      }
      ASSERT_EQ(flexed_points(v), expected);
    });
  }
}

TEST(GammaExhaustive, AgreesWithNaiveDefinition) {
  std::size_t members = 0;
  for (std::size_t n = 3; n <= 11; ++n) {
    oracle::all_words(n, 2, [&](const Word& w) {
      if (!oracle::rich(w)) return;
      for (std::size_t a = 1; a + 2 <= n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          const Word v = w.substr(0, a), vbar = w.substr(a, b - a), u = w.substr(b);
          const Word head = v + vbar;
          bool naive = oracle::lpps(head) == vbar;
          for (std::size_t i = 0; naive && i < u.size(); ++i) {
            naive = !oracle::two_way(head + u.substr(0, i), 2);
          }
          ASSERT_EQ(gamma_check(v, vbar, u, kBinary), naive);
          members += naive;
        }
      }
    });
  }
  EXPECT_EQ(members, 172u);
}
