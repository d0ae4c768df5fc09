#pragma once

#include <cstddef>
#include <map>

#include "richwords/word.hpp"

namespace richwords {

/**
 * Value-set of switches x·p·y (x != y letters, p a palindrome), each with one
 * start position where it occurs in the source word. Iteration order is
 * (length, lexicographic).
 */
class SwitchSet {
 public:
  void insert(const Word& w, std::size_t position) { elements_.emplace(w, position); }

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(const Word& w) const { return elements_.contains(w); }
  std::size_t position(const Word& w) const { return elements_.at(w); }

  WordSet words() const;
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

 private:
  std::map<Word, std::size_t, ShortLexLess> elements_;
};

bool is_switch(const Word& w);

/// All switch factors of v. Linear number of candidates: a switch is a
/// maximal palindrome at some centre together with its two flanking letters.
SwitchSet switches_of(const Word& v);

/// Switches of v·u that are suffixes of v·t for a nonempty prefix t of u.
/// Rejects u = ε.
SwitchSet switch_suf(const Word& v, const Word& u);

/// Elements of s that are not proper factors of another element.
WordSet reduced(const WordSet& s);

/// x·p·y -> x·p·x. Rejects non-switches.
Word swc(const Word& t);

/// reduced({swc(t) : t in b}). Rejects sets containing a non-switch.
WordSet swc_set(const WordSet& b);
WordSet swc_set(const SwitchSet& b);

/// occ(w, u) + occ(w, u^R) == 1, summing over the set {u, u^R}.
bool reverse_unioccurrent(const Word& w, const Word& u);

}  // namespace richwords
