#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "richwords/extension.hpp"
#include "richwords/richness.hpp"
#include "richwords/switches.hpp"

using namespace richwords;

namespace {

Word W(const char* s) { return parse_digits(s); }

WordSet words(std::initializer_list<const char*> list) {
  WordSet out;
  for (const char* s : list) out.insert(W(s));
  return out;
}

}  // namespace

TEST(IsSwitch, Examples) {
  EXPECT_TRUE(is_switch(W("01")));
  EXPECT_TRUE(is_switch(W("11012")));
  EXPECT_FALSE(is_switch(W("00")));
  EXPECT_FALSE(is_switch(W("0")));
  EXPECT_FALSE(is_switch(W("0120")));
}

TEST(SwitchesOf, Examples) {
  EXPECT_EQ(switches_of(W("010011012")).words(),
            words({"01", "10", "100", "110", "011", "001", "010011", "001101", "12", "012", "11012"}));
  EXPECT_TRUE(switches_of(W("00")).empty());
  EXPECT_EQ(switches_of(W("01")).words(), words({"01"}));
  const auto set = switches_of(W("010011012"));
  for (const auto& [w, pos] : set) EXPECT_EQ(W("010011012").substr(pos, w.size()), w);
}

TEST(SwitchSuf, Examples) {
  // 01 is a switch suffix of 0100110·1 as well
  EXPECT_EQ(switch_suf(W("0100110"), W("12")).words(), words({"01", "001101", "12", "012", "11012"}));
  EXPECT_EQ(switch_suf(W("00"), W("1")).words(), words({"01", "001"}));
  EXPECT_TRUE(switch_suf(W("0"), W("0")).empty());
  EXPECT_THROW(switch_suf(W("0"), Word{}), std::invalid_argument);
}

TEST(Reduced, Examples) {
  EXPECT_EQ(reduced(words({"001100", "11", "010", "11011"})), words({"001100", "010", "11011"}));
  EXPECT_TRUE(reduced({}).empty());
  EXPECT_EQ(reduced(words({"0110"})), words({"0110"}));
}

TEST(Swc, Examples) {
  EXPECT_EQ(swc(W("001101")), W("001100"));
  EXPECT_EQ(swc(W("12")), W("11"));
  EXPECT_EQ(swc(W("012")), W("010"));
  EXPECT_EQ(swc(W("11012")), W("11011"));
  EXPECT_THROW(swc(W("00")), std::invalid_argument);
}

TEST(SwcSet, Examples) {
  EXPECT_EQ(swc_set(switch_suf(W("0100110"), W("12"))), words({"001100", "010", "11011"}));
  EXPECT_TRUE(swc_set(WordSet{}).empty());
  EXPECT_EQ(swc_set(words({"01"})), words({"00"}));
  EXPECT_THROW(swc_set(words({"01", "00"})), std::invalid_argument);
  EXPECT_EQ(swc_set(switches_of(W("001011010"))), words({"000", "111", "00100", "01010", "11011"}));
}

TEST(ReverseUnioccurrent, Examples) {
  EXPECT_TRUE(reverse_unioccurrent(W("010011012"), W("11012")));
  EXPECT_TRUE(reverse_unioccurrent(W("0110"), W("11")));
  EXPECT_FALSE(reverse_unioccurrent(W("0101"), W("01")));
  EXPECT_THROW(reverse_unioccurrent(Word{}, W("0")), std::invalid_argument);
}

TEST(SwitchesExhaustive, MatchFactorScan) {
  for (std::size_t q = 2; q <= 3; ++q) {
    for (std::size_t n = 0; n <= (q == 2 ? 12u : 7u); ++n) {
      oracle::all_words(n, q, [](const Word& v) { ASSERT_EQ(switches_of(v).words(), oracle::switches(v)); });
    }
  }
}

TEST(SwitchesExhaustive, SwitchSufMatchesDefinition) {
  for (std::size_t n = 0; n <= 6; ++n) {
    oracle::all_words(n, 3, [](const Word& v) {
      for (std::size_t m = 1; m <= 2; ++m) {
        oracle::all_words(m, 3, [&](const Word& u) {
          const WordSet all = oracle::switches(v + u);
          WordSet expected;
          for (std::size_t k = 1; k <= u.size(); ++k) {
            const Word vt = v + u.substr(0, k);
            for (const Word& s : all) {
              if (is_suffix(vt, s)) expected.insert(s);
            }
          }
          ASSERT_EQ(switch_suf(v, u).words(), expected);
        });
      }
    });
  }
}

TEST(SwitchesExhaustive, ReverseUnioccurrentSwitchGivesFlexedPoint) {
  for (std::size_t q = 2; q <= 3; ++q) {
    for (std::size_t n = 2; n <= (q == 2 ? 12u : 9u); ++n) {
      oracle::all_words(n, q, [](const Word& wx) {
        if (!rich(wx)) return;
        const WordSet flexed = flexed_points(wx);
        for (std::size_t len = 2; len <= wx.size(); ++len) {
          const Word s = wx.substr(wx.size() - len);
          if (is_switch(s) && reverse_unioccurrent(wx, s)) {
            ASSERT_TRUE(flexed.contains(wx));
            return;
          }
        }
      });
    }
  }
}

TEST(SwitchesExhaustive, EverySwitchEndsAFlexedPoint) {
  for (std::size_t n = 2; n <= 12; ++n) {
    oracle::all_words(n, 2, [](const Word& w) {
      if (!rich(w)) return;
      const WordSet flexed = flexed_points(w);
      for (const auto& [t, pos] : switches_of(w)) {
        bool found = false;
        for (const Word& v : flexed) found = found || is_suffix(v, t) || is_suffix(v, reverse(t));
        ASSERT_TRUE(found);
      }
    });
  }
}

TEST(SwitchesProperty, ReducedAndCore) {
  for (std::size_t n = 1; n <= 9; ++n) {
    oracle::all_words(n, 2, [](const Word& w) {
      const WordSet s = oracle::switches(w);
      const WordSet r = reduced(s);
      for (const Word& x : r) {
        ASSERT_TRUE(s.contains(x));
        for (const Word& y : s) {
          if (x != y) ASSERT_FALSE(is_factor(y, x));
        }
      }
      for (const Word& t : s) {
        const Word c = swc(t);
        ASSERT_EQ(c.substr(1, c.size() - 2), t.substr(1, t.size() - 2));
        ASSERT_TRUE(is_palindrome(c));
      }
    });
  }
}
