#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "richwords/word.hpp"

namespace richwords {

/**
 * Palindromic tree (eertree) over a growing word, with an undo journal.
 *
 * One node per distinct nonempty palindromic factor plus two roots of
 * conceptual length -1 and 0. append() reports whether the longest
 * palindromic suffix of the extended word is new, which by the prefix
 * characterisation of richness is exactly "the new prefix keeps the word
 * rich". rollback() undoes the most recent appends.
 *
 * Single writer. Each phi_search worker owns its own index.
 */
class PalIndex {
 public:
  explicit PalIndex(std::size_t alphabet_size);
  PalIndex(std::size_t alphabet_size, const Word& w);

  /// Returns true iff a new palindrome (the new lps) was created.
  bool append(Symbol x);
  void rollback(std::size_t steps = 1);

  /// Distinct palindromic factors including ε.
  std::size_t distinct_palindromes() const noexcept { return len_.size() - 1; }

  std::size_t size() const noexcept { return word_.size(); }
  std::size_t alphabet_size() const noexcept { return q_; }
  const std::vector<Symbol>& letters() const noexcept { return word_; }
  Word word() const { return Word(word_); }

  /// True iff every append so far created a palindrome.
  bool rich() const noexcept { return repeats_ == 0; }

  std::size_t lps_length() const noexcept { return static_cast<std::size_t>(len_[last_]); }
  /// Longest proper palindromic suffix. Requires a nonempty word.
  std::size_t lpps_length() const;
  /// The letter x with x·lpps(w) a suffix of w, i.e. the right standard extension.
  Symbol right_standard_letter() const;

  /// Would appending x create a new palindrome? The index is left unchanged.
  bool probe(Symbol x);

  friend bool operator==(const PalIndex&, const PalIndex&) = default;

 private:
  struct JournalEntry {
    std::int32_t previous_last;
    std::int32_t parent;  // node whose transition was added, or -1
    friend bool operator==(const JournalEntry&, const JournalEntry&) = default;
  };

  std::int32_t& edge(std::int32_t node, Symbol x) {
    return next_[static_cast<std::size_t>(node) * q_ + x];
  }
  std::int32_t find_extendable(std::int32_t node, Symbol x) const;

  std::size_t q_;
  std::vector<Symbol> word_;
  std::vector<std::int32_t> len_;
  std::vector<std::int32_t> link_;
  std::vector<std::int32_t> next_;  // flat node-major transition table, -1 = none
  std::int32_t last_ = 1;
  std::size_t repeats_ = 0;
  std::vector<JournalEntry> journal_;
};

}  // namespace richwords
