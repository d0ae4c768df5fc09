#include "richwords/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace richwords {

namespace {

constexpr std::string_view kStandardSymbols = "0123456789abcdefghijklmnopqrstuvwxyz";

std::vector<std::size_t> prefix_function(std::span<const Symbol> p) {
  std::vector<std::size_t> pi(p.size(), 0);
  for (std::size_t i = 1; i < p.size(); ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && p[i] != p[k]) k = pi[k - 1];
    if (p[i] == p[k]) ++k;
    pi[i] = k;
  }
  return pi;
}

}  // namespace

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > size()) throw std::out_of_range("Word::substr: position past end");
  const std::size_t n = std::min(len, size() - pos);
  return Word(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
              letters_.begin() + static_cast<std::ptrdiff_t>(pos + n));
}

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  index_.fill(-1);
  if (symbols_.size() < 2) throw std::invalid_argument("alphabet needs at least two symbols");
  if (symbols_.size() > 256) throw std::invalid_argument("alphabet too large");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto& slot = index_[static_cast<unsigned char>(symbols_[i])];
    if (slot != -1) {
      throw std::invalid_argument(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
    }
    slot = static_cast<std::int16_t>(i);
  }
}

Alphabet Alphabet::infer(std::string_view text) {
  std::string chars(text);
  std::sort(chars.begin(), chars.end());
  chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
  for (char c : kStandardSymbols) {
    if (chars.size() >= 2) break;
    if (chars.find(c) == std::string::npos) chars.push_back(c);
  }
  std::sort(chars.begin(), chars.end());
  return Alphabet(std::move(chars));
}

Alphabet Alphabet::standard(std::size_t q) {
  if (q < 2 || q > kStandardSymbols.size()) {
    throw std::invalid_argument("standard alphabet size must be in [2, 36]");
  }
  return Alphabet(std::string(kStandardSymbols.substr(0, q)));
}

std::optional<Symbol> Alphabet::find(char c) const {
  const auto slot = index_[static_cast<unsigned char>(c)];
  if (slot < 0) return std::nullopt;
  return static_cast<Symbol>(slot);
}

bool Alphabet::contains(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](Symbol x) { return x < size(); });
}

Word Alphabet::parse(std::string_view text) const {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) {
    auto x = find(c);
    if (!x) {
      throw std::invalid_argument(std::string("symbol '") + c + "' is not in alphabet \"" +
                                  symbols_ + "\"");
    }
    out.push_back(*x);
  }
  return Word(std::move(out));
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (auto x : w) out.push_back(symbol(x));
  return out;
}

Word parse_digits(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("parse_digits: not a digit");
    out.push_back(static_cast<Symbol>(c - '0'));
  }
  return Word(std::move(out));
}

Word reverse(const Word& w) { return Word(std::make_reverse_iterator(w.end()), std::make_reverse_iterator(w.begin())); }

bool is_palindrome(std::span<const Symbol> w) {
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2), w.rbegin());
}

bool is_palindrome(const Word& w) { return is_palindrome(w.letters()); }

std::vector<std::size_t> occurrences(const Word& u, const Word& v) {
  if (v.empty()) throw std::invalid_argument("occ: pattern must be nonempty");
  std::vector<std::size_t> out;
  if (v.size() > u.size()) return out;
  const auto pi = prefix_function(v.letters());
  std::size_t k = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    while (k > 0 && u[i] != v[k]) k = pi[k - 1];
    if (u[i] == v[k]) ++k;
    if (k == v.size()) {
      out.push_back(i + 1 - v.size());
      k = pi[k - 1];
    }
  }
  return out;
}

std::size_t occ(const Word& u, const Word& v) { return occurrences(u, v).size(); }

std::optional<std::size_t> find(const Word& w, const Word& v, std::size_t from) {
  if (v.empty()) return from <= w.size() ? std::optional<std::size_t>(from) : std::nullopt;
  if (from >= w.size() || v.size() > w.size() - from) return std::nullopt;
  const auto pi = prefix_function(v.letters());
  std::size_t k = 0;
  for (std::size_t i = from; i < w.size(); ++i) {
    while (k > 0 && w[i] != v[k]) k = pi[k - 1];
    if (w[i] == v[k]) ++k;
    if (k == v.size()) return i + 1 - v.size();
  }
  return std::nullopt;
}

bool is_factor(const Word& w, const Word& v) { return find(w, v).has_value(); }

bool is_prefix(const Word& w, const Word& p) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool is_suffix(const Word& w, const Word& s) {
  return s.size() <= w.size() &&
         std::equal(s.begin(), s.end(), w.begin() + static_cast<std::ptrdiff_t>(w.size() - s.size()));
}

std::size_t affix_length(const Word& w, Affix kind) {
  const bool proper = kind == Affix::lpps || kind == Affix::lppp;
  if (proper && w.empty()) throw std::invalid_argument("proper palindromic affix of the empty word");
  if (w.empty()) return 0;
  const PalindromeTable table(w.letters());
  const std::size_t n = w.size();
  const std::size_t longest = proper ? n - 1 : n;
  const bool suffix = kind == Affix::lps || kind == Affix::lpps;
  for (std::size_t len = longest; len > 0; --len) {
    const std::size_t pos = suffix ? n - len : 0;
    if (table.is_palindrome(pos, len)) return len;
  }
  return 0;
}

Word affix(const Word& w, Affix kind) {
  const std::size_t len = affix_length(w, kind);
  const bool suffix = kind == Affix::lps || kind == Affix::lpps;
  return suffix ? w.substr(w.size() - len) : w.substr(0, len);
}

Word trim(const Word& w, Side side) {
  if (w.empty()) throw std::invalid_argument("trim of the empty word");
  return side == Side::left ? w.substr(1) : w.substr(0, w.size() - 1);
}

WordSet suffix_union(const Word& v, const Word& u) {
  if (u.empty()) throw std::invalid_argument("suffix_union: u must be nonempty");
  WordSet out;
  Word vt = v;
  for (auto x : u) {
    vt += x;
    for (auto s : suffixes(vt)) out.insert(std::move(s));
  }
  return out;
}

std::size_t max_pow(const Word& w, Symbol x) {
  std::size_t best = 0;
  std::size_t run = 0;
  for (auto y : w) {
    run = (y == x) ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

PalindromeTable::PalindromeTable(std::span<const Symbol> w) : n_(w.size()) {
  // Centres 0..2n over the word interleaved with separators: even = gap,
  // odd = letter. radius_[c] is the longest palindrome length centred at c.
  const std::size_t m = 2 * n_ + 1;
  radius_.assign(m, 0);
  auto same = [&](std::size_t a, std::size_t b) { return (a % 2 == 0) || w[a / 2] == w[b / 2]; };
  std::size_t centre = 0;
  std::size_t right = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t r = 0;
    if (i < right) r = std::min<std::size_t>(right - i, radius_[2 * centre - i]);
    while (r < i && i + r + 1 < m && same(i - r - 1, i + r + 1)) ++r;
    radius_[i] = static_cast<std::uint32_t>(r);
    if (i + r > right) {
      centre = i;
      right = i + r;
    }
  }
}

bool PalindromeTable::is_palindrome(std::size_t pos, std::size_t len) const {
  if (len == 0) return true;
  if (pos + len > n_) throw std::out_of_range("PalindromeTable: factor out of range");
  return radius_[2 * pos + len] >= len;
}

}  // namespace richwords
