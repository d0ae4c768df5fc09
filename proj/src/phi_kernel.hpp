#pragma once

// Shared depth-first kernel for the serial and OpenMP phi searches.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "richwords/extension.hpp"
#include "richwords/pal_index.hpp"
#include "richwords/phi_search.hpp"

namespace richwords::detail {

// Distinct letters used by a canonical word are exactly 0..m-1.
inline std::size_t letters_in_use(const std::vector<Symbol>& word) {
  std::size_t m = 0;
  for (auto x : word) m = std::max<std::size_t>(m, std::size_t{x} + 1);
  return m;
}

template <typename Visit>
void extend_rich(PalIndex& index, std::size_t n, bool canonical, std::size_t in_use, Visit& visit) {
  if (index.size() == n) {
    visit(index);
    return;
  }
  const std::size_t limit = canonical ? std::min(index.alphabet_size(), in_use + 1) : index.alphabet_size();
  for (std::size_t x = 0; x < limit; ++x) {
    if (index.append(static_cast<Symbol>(x))) {
      extend_rich(index, n, canonical, std::max(in_use, x + 1), visit);
    }
    index.rollback(1);
  }
}

// Running maximum of omega with its witnesses, in visit order.
struct PhiAccumulator {
  std::size_t best = 0;
  std::size_t count = 0;
  std::size_t cap = 0;
  std::vector<Word> witnesses;

  void offer(const PalIndex& index, std::size_t omega) {
    ++count;
    if (count == 1 || omega > best) {
      best = omega;
      witnesses.clear();
    }
    if (omega == best && (cap == 0 || witnesses.size() < cap)) witnesses.push_back(index.word());
  }

  // `later` covers words that sort after everything seen here.
  void merge(const PhiAccumulator& later) {
    if (later.count == 0) return;
    const bool first = count == 0;
    count += later.count;
    if (first || later.best > best) {
      best = later.best;
      witnesses = later.witnesses;
    } else if (later.best == best) {
      for (const auto& w : later.witnesses) {
        if (cap != 0 && witnesses.size() >= cap) break;
        witnesses.push_back(w);
      }
    }
  }
};

inline void score(PalIndex& index, std::size_t n, const Alphabet& alphabet, PhiAccumulator& acc) {
  const auto omega = forced_walk_length(index, n);
  if (!omega) throw FalsificationError(alphabet.format(index.word()));
  acc.offer(index, *omega);
}

inline PhiResult finish(const PhiAccumulator& acc, std::size_t n, const Alphabet& alphabet) {
  PhiResult result;
  result.n = n;
  result.q = alphabet.size();
  result.phi = acc.best;
  result.enumerated = acc.count;
  result.witnesses.reserve(acc.witnesses.size());
  for (const auto& w : acc.witnesses) result.witnesses.push_back(alphabet.format(w));
  return result;
}

}  // namespace richwords::detail
