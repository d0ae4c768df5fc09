#pragma once

// Brute-force reference implementations for tests. Nothing here touches
// PalIndex, PalindromeTable or the library's search code: every answer is
// recomputed from the definitions by scanning substrings.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "richwords/word.hpp"

namespace richwords::oracle {

inline Word slice(const Word& w, std::size_t pos, std::size_t len) {
  std::vector<Symbol> out;
  for (std::size_t i = pos; i < pos + len; ++i) out.push_back(w[i]);
  return Word(std::move(out));
}

inline bool palindrome_at(const Word& w, std::size_t pos, std::size_t len) {
  for (std::size_t i = 0; i < len / 2; ++i) {
    if (w[pos + i] != w[pos + len - 1 - i]) return false;
  }
  return true;
}

inline bool palindrome(const Word& w) { return palindrome_at(w, 0, w.size()); }

/// Every (start, length) pair is tested; only palindromes are copied.
inline std::set<Word> palindromic_factors(const Word& w) {
  std::set<Word> out{Word{}};
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = 1; i + len <= w.size(); ++len) {
      if (palindrome_at(w, i, len)) out.insert(slice(w, i, len));
    }
  }
  return out;
}

inline bool rich(const Word& w) { return palindromic_factors(w).size() == w.size() + 1; }

inline std::size_t occ(const Word& u, const Word& v) {
  std::size_t count = 0;
  for (std::size_t i = 0; i + v.size() <= u.size(); ++i) {
    std::size_t j = 0;
    while (j < v.size() && u[i + j] == v[j]) ++j;
    if (j == v.size()) ++count;
  }
  return count;
}

inline Word lps(const Word& w) {
  for (std::size_t len = w.size(); len > 0; --len) {
    if (palindrome_at(w, w.size() - len, len)) return slice(w, w.size() - len, len);
  }
  return {};
}

inline Word lpps(const Word& w) {
  for (std::size_t len = w.size() - 1; len > 0; --len) {
    if (palindrome_at(w, w.size() - len, len)) return slice(w, w.size() - len, len);
  }
  return {};
}

inline Word lpp(const Word& w) {
  for (std::size_t len = w.size(); len > 0; --len) {
    if (palindrome_at(w, 0, len)) return slice(w, 0, len);
  }
  return {};
}

/// Per prefix: is its longest palindromic suffix unioccurrent in it?
inline std::vector<bool> unioccurrent_lps_flags(const Word& w) {
  std::vector<bool> out;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    const Word p = slice(w, 0, i);
    out.push_back(oracle::occ(p, oracle::lps(p)) == 1);
  }
  return out;
}

inline std::vector<Symbol> rich_letters(const Word& w, std::size_t q) {
  std::vector<Symbol> out;
  for (std::size_t x = 0; x < q; ++x) {
    if (oracle::rich(w + static_cast<Symbol>(x))) out.push_back(static_cast<Symbol>(x));
  }
  return out;
}

inline bool two_way(const Word& w, std::size_t q) { return rich_letters(w, q).size() >= 2; }

inline Word std_ext_right(const Word& w) {
  const Word p = oracle::lpps(w);
  return w + w[w.size() - p.size() - 1];
}

/// Visits every word of length n over q symbols, lexicographically.
inline void all_words(std::size_t n, std::size_t q, const std::function<void(const Word&)>& visit) {
  Word w;
  std::function<void()> grow = [&] {
    if (w.size() == n) {
      visit(w);
      return;
    }
    for (std::size_t x = 0; x < q; ++x) {
      w.push_back(static_cast<Symbol>(x));
      grow();
      w.pop_back();
    }
  };
  grow();
}

/// min |u| with wu rich and two-way extendable, searching every u of length
/// up to max_len in lexicographic order; also returns the first such u.
inline std::optional<std::pair<std::size_t, Word>> brute_omega(const Word& w, std::size_t q,
                                                               std::size_t max_len) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::optional<Word> found;
    all_words(len, q, [&](const Word& u) {
      if (found) return;
      const Word wu = w + u;
      if (oracle::rich(wu) && oracle::two_way(wu, q)) found = u;
    });
    if (found) return std::make_pair(len, *found);
  }
  return std::nullopt;
}

inline bool switch_word(const Word& w) {
  return w.size() >= 2 && w.front() != w.back() && palindrome(slice(w, 1, w.size() - 2));
}

inline WordSet switches(const Word& v) {
  WordSet out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t len = 2; i + len <= v.size(); ++len) {
      if (v[i] != v[i + len - 1] && palindrome_at(v, i + 1, len - 2)) out.insert(slice(v, i, len));
    }
  }
  return out;
}

inline Word random_word(std::mt19937_64& rng, std::size_t max_len, std::size_t q) {
  std::uniform_int_distribution<std::size_t> length(0, max_len);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(q) - 1);
  std::vector<Symbol> out(length(rng));
  for (auto& x : out) x = static_cast<Symbol>(letter(rng));
  return Word(std::move(out));
}

/// Random rich word grown by appending random letters that keep it rich.
inline Word random_rich_word(std::mt19937_64& rng, std::size_t len, std::size_t q) {
  Word w;
  std::uniform_int_distribution<int> letter(0, static_cast<int>(q) - 1);
  while (w.size() < len) {
    std::vector<Symbol> choices;
    for (std::size_t x = 0; x < q; ++x) {
      if (oracle::rich(w + static_cast<Symbol>(x))) choices.push_back(static_cast<Symbol>(x));
    }
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    w += choices[pick(rng)];
  }
  return w;
}

}  // namespace richwords::oracle
