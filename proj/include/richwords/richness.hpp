#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "richwords/word.hpp"

namespace richwords {

/// Longest palindromic suffix of one prefix, as an inclusive span, and
/// whether it occurs only once in that prefix.
struct PrefixRecord {
  std::size_t lps_start;
  std::size_t lps_end;
  bool unioccurrent;

  friend bool operator==(const PrefixRecord&, const PrefixRecord&) = default;
};

/**
 * Witness for either richness verdict.
 *
 * per_prefix[i] describes the prefix w[0..i]. first_failure is the index i of
 * the shortest prefix whose lps repeats; it is set iff rich is false.
 */
struct RichnessCertificate {
  Word word;
  bool rich = true;
  std::vector<PrefixRecord> per_prefix;
  std::optional<std::size_t> first_failure;

  explicit operator bool() const noexcept { return rich; }
};

/// Number of symbols needed to index w (max symbol + 1, at least 2).
std::size_t symbol_span(const Word& w);

/// One left-to-right pass over a PalIndex.
RichnessCertificate is_rich(const Word& w);

/// Verdict only; stops at the first repeated lps.
bool rich(const Word& w);

/// All x in the alphabet with wx rich, ascending. Rejects non-rich w.
std::vector<Symbol> rich_extension_letters(const Word& w, const Alphabet& alphabet);

/// Factors of w with exactly two occurrences of u, one as prefix and one as
/// suffix. Rejects u = ε and u not a factor of w.
WordSet complete_returns(const Word& w, const Word& u);

/// Every factor p of w has p and p^R rich. Quadratic: one index per start.
bool reversal_closure_check(const Word& w);

}  // namespace richwords
