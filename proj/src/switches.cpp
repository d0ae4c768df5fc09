#include "richwords/switches.hpp"

#include <stdexcept>

namespace richwords {

WordSet SwitchSet::words() const {
  WordSet out;
  for (const auto& [w, pos] : elements_) out.insert(w);
  return out;
}

bool is_switch(const Word& w) {
  if (w.size() < 2 || w.front() == w.back()) return false;
  return is_palindrome(w.letters().subspan(1, w.size() - 2));
}

SwitchSet switches_of(const Word& v) {
  SwitchSet out;
  const std::size_t n = v.size();
  // Centre c in [0, 2n]: odd centres sit on letter (c-1)/2, even ones between
  // letters. Expand each to its maximal palindrome; if both flanks exist they
  // differ and x·p·y is a switch. Non-maximal palindromes have equal flanks.
  for (std::size_t c = 0; c <= 2 * n; ++c) {
    std::size_t lo;  // first letter of p
    std::size_t hi;  // one past the last letter of p
    if (c % 2 == 1) {
      lo = (c - 1) / 2;
      hi = lo + 1;
    } else {
      lo = hi = c / 2;
    }
    while (lo > 0 && hi < n && v[lo - 1] == v[hi]) {
      --lo;
      ++hi;
    }
    if (lo > 0 && hi < n) out.insert(v.substr(lo - 1, hi - lo + 2), lo - 1);
  }
  return out;
}

SwitchSet switch_suf(const Word& v, const Word& u) {
  if (u.empty()) throw std::invalid_argument("switch_suf: u must be nonempty");
  const Word vu = v + u;
  const PalindromeTable table(vu.letters());
  SwitchSet out;
  for (std::size_t end = v.size(); end < vu.size(); ++end) {
    // Candidate switches vu[start..end].
    for (std::size_t start = 0; start < end; ++start) {
      if (vu[start] == vu[end]) continue;
      if (table.is_palindrome(start + 1, end - start - 1)) {
        out.insert(vu.substr(start, end - start + 1), start);
      }
    }
  }
  return out;
}

WordSet reduced(const WordSet& s) {
  WordSet out;
  for (const auto& w : s) {
    bool covered = false;
    for (const auto& u : s) {
      if (u.size() > w.size() && is_factor(u, w)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.insert(w);
  }
  return out;
}

Word swc(const Word& t) {
  if (!is_switch(t)) throw std::invalid_argument("swc: not a switch");
  Word out = t;
  out.pop_back();
  out.push_back(t.front());
  return out;
}

WordSet swc_set(const WordSet& b) {
  WordSet closures;
  for (const auto& t : b) closures.insert(swc(t));
  return reduced(closures);
}

WordSet swc_set(const SwitchSet& b) { return swc_set(b.words()); }

bool reverse_unioccurrent(const Word& w, const Word& u) {
  if (w.empty() || u.empty()) throw std::invalid_argument("reverse_unioccurrent: arguments must be nonempty");
  const Word r = reverse(u);
  std::size_t total = occ(w, u);
  if (r != u) total += occ(w, r);
  return total == 1;
}

}  // namespace richwords
