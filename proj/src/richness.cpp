#include "richwords/richness.hpp"

#include <algorithm>
#include <stdexcept>

#include "richwords/pal_index.hpp"

namespace richwords {

std::size_t symbol_span(const Word& w) {
  std::size_t span = 2;
  for (auto x : w) span = std::max<std::size_t>(span, std::size_t{x} + 1);
  return span;
}

RichnessCertificate is_rich(const Word& w) {
  RichnessCertificate cert;
  cert.word = w;
  cert.per_prefix.reserve(w.size());
  PalIndex index(symbol_span(w));
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool created = index.append(w[i]);
    const std::size_t len = index.lps_length();
    cert.per_prefix.push_back({i + 1 - len, i, created});
    if (!created && !cert.first_failure) cert.first_failure = i;
  }
  cert.rich = !cert.first_failure.has_value();
  return cert;
}

bool rich(const Word& w) {
  PalIndex index(symbol_span(w));
  for (auto x : w) {
    if (!index.append(x)) return false;
  }
  return true;
}

std::vector<Symbol> rich_extension_letters(const Word& w, const Alphabet& alphabet) {
  if (!alphabet.contains(w)) throw std::invalid_argument("word uses symbols outside the alphabet");
  PalIndex index(alphabet.size(), w);
  if (!index.rich()) throw std::invalid_argument("rich_extension_letters: word is not rich");
  std::vector<Symbol> out;
  for (std::size_t x = 0; x < alphabet.size(); ++x) {
    if (index.probe(static_cast<Symbol>(x))) out.push_back(static_cast<Symbol>(x));
  }
  return out;
}

WordSet complete_returns(const Word& w, const Word& u) {
  if (u.empty()) throw std::invalid_argument("complete_returns: u must be nonempty");
  const auto at = occurrences(w, u);
  if (at.empty()) throw std::invalid_argument("complete_returns: u is not a factor of w");
  WordSet out;
  for (std::size_t i = 0; i + 1 < at.size(); ++i) {
    out.insert(w.substr(at[i], at[i + 1] + u.size() - at[i]));
  }
  return out;
}

bool reversal_closure_check(const Word& w) {
  // p rich for every factor p  <=>  every prefix of every suffix is rich;
  // same for the reversal.
  const std::size_t q = symbol_span(w);
  for (const Word& base : {w, reverse(w)}) {
    for (std::size_t start = 0; start < base.size(); ++start) {
      PalIndex index(q);
      for (std::size_t i = start; i < base.size(); ++i) {
        if (!index.append(base[i])) return false;
      }
    }
  }
  return true;
}

}  // namespace richwords
