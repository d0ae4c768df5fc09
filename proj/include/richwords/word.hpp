#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <ranges>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace richwords {

/// Index of a letter inside its Alphabet.
using Symbol = std::uint8_t;

/**
 * Finite sequence of symbol indices.
 *
 * Words are plain values: they do not remember the Alphabet they were parsed
 * with. Operations that depend on the alphabet (extension letters, the
 * construction's extra symbols) take it explicitly.
 */
class Word {
 public:
  using value_type = Symbol;
  using const_iterator = std::vector<Symbol>::const_iterator;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Word() = default;
  explicit Word(std::vector<Symbol> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Symbol> letters) : letters_(letters) {}
  template <std::input_iterator It>
  Word(It first, It last) : letters_(first, last) {}

  static Word repeat(Symbol x, std::size_t count) {
    return Word(std::vector<Symbol>(count, x));
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Symbol operator[](std::size_t i) const { return letters_[i]; }
  Symbol front() const { return letters_.front(); }
  Symbol back() const { return letters_.back(); }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  std::span<const Symbol> letters() const noexcept { return letters_; }

  /// Factor starting at `pos` of at most `len` letters.
  Word substr(std::size_t pos, std::size_t len = npos) const;

  void push_back(Symbol x) { letters_.push_back(x); }
  void pop_back() { letters_.pop_back(); }
  void reserve(std::size_t n) { letters_.reserve(n); }

  Word& operator+=(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
  }
  Word& operator+=(Symbol x) {
    letters_.push_back(x);
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }
  friend Word operator+(Word a, Symbol x) { return a += x; }
  friend Word operator+(Symbol x, const Word& w) {
    Word out;
    out.reserve(w.size() + 1);
    out.push_back(x);
    return out += w;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> letters_;
};

/// Length first, then lexicographic. Every set printed by the tools uses this.
struct ShortLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using WordSet = std::set<Word, ShortLexLess>;

/**
 * Ordered set of q >= 2 distinct single-character symbols.
 *
 * symbols()[0] plays the role of the letter 0 and symbols()[1] the letter 1
 * in the g_n / h_n constructions.
 */
class Alphabet {
 public:
  static constexpr Symbol zero = 0;
  static constexpr Symbol one = 1;

  explicit Alphabet(std::string symbols);

  /// Sorted distinct characters of `text`, padded from the standard digit
  /// sequence when fewer than two distinct characters are present.
  static Alphabet infer(std::string_view text);
  /// The first q characters of "0123456789abcdefghijklmnopqrstuvwxyz".
  static Alphabet standard(std::size_t q);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbols() const noexcept { return symbols_; }
  char symbol(Symbol x) const { return symbols_.at(x); }
  std::optional<Symbol> find(char c) const;
  bool contains(const Word& w) const;

  /// Throws std::invalid_argument on characters outside the alphabet.
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> index_{};
};

/// Parses decimal digits directly as symbol indices ("0102" -> {0,1,0,2}).
Word parse_digits(std::string_view text);

enum class Side { left, right };
enum class Affix { lps, lpp, lpps, lppp };

Word reverse(const Word& w);
bool is_palindrome(const Word& w);
bool is_palindrome(std::span<const Symbol> w);

/// Number of (possibly overlapping) occurrences of `v` in `u`. Rejects v = ε.
std::size_t occ(const Word& u, const Word& v);

/// Start positions of all occurrences of `v` in `u`, ascending. v = ε rejected.
std::vector<std::size_t> occurrences(const Word& u, const Word& v);

/// First occurrence of `v` in `w` starting at or after `from` (KMP, linear).
std::optional<std::size_t> find(const Word& w, const Word& v, std::size_t from = 0);

bool is_factor(const Word& w, const Word& v);
bool is_prefix(const Word& w, const Word& p);
bool is_suffix(const Word& w, const Word& s);

/// Longest (proper) palindromic suffix or prefix. lpps/lppp reject ε.
Word affix(const Word& w, Affix kind);
std::size_t affix_length(const Word& w, Affix kind);

/// Removes the first (left) or last (right) letter. Rejects ε.
Word trim(const Word& w, Side side);

/// Union over nonempty prefixes t of u of Suffix(v t). Rejects u = ε.
WordSet suffix_union(const Word& v, const Word& u);

/// Longest k with x^k a factor of w.
std::size_t max_pow(const Word& w, Symbol x);

inline auto prefixes(Word w) {
  const std::size_t n = w.size();
  return std::views::iota(std::size_t{0}, n + 1) |
         std::views::transform([w = std::move(w)](std::size_t len) { return w.substr(0, len); });
}

inline auto suffixes(Word w) {
  const std::size_t n = w.size();
  return std::views::iota(std::size_t{0}, n + 1) |
         std::views::transform([w = std::move(w)](std::size_t len) { return w.substr(w.size() - len); });
}

/**
 * Manacher table: constant-time palindromicity of any factor after a linear
 * build. Used where the words get long (the h_n pipeline).
 */
class PalindromeTable {
 public:
  explicit PalindromeTable(std::span<const Symbol> w);

  bool is_palindrome(std::size_t pos, std::size_t len) const;
  std::size_t size() const noexcept { return n_; }

 private:
  std::size_t n_ = 0;
  // radius_[c] over the 2n+1 interleaved centres, measured in letters.
  std::vector<std::uint32_t> radius_;
};

}  // namespace richwords

template <>
struct std::hash<richwords::Word> {
  std::size_t operator()(const richwords::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h ^ w.size();
  }
};
