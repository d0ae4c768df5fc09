#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "richwords/pal_index.hpp"
#include "richwords/word.hpp"

namespace richwords {

struct ExtensionStep {
  Symbol letter;
  bool forced;
};

/**
 * The forced extension walk from `base`.
 *
 * Every step appends the only letter that keeps the word rich, until a word
 * with two rich one-letter extensions is reached. omega is the number of
 * steps, or empty when the budget ran out first.
 */
struct ExtensionTrace {
  Word base;
  std::vector<ExtensionStep> steps;
  std::optional<std::size_t> omega;
  std::optional<std::pair<Symbol, Symbol>> branch_witness;

  Word path() const;
  bool exceeded_budget() const noexcept { return !omega.has_value(); }
};

struct GammaTriple {
  Word v;
  Word vbar;
  Word u;

  friend bool operator==(const GammaTriple&, const GammaTriple&) = default;
};

/// j-fold right (x·lpps(w) ∈ Suffix(w)) or left (lppp(w)·x ∈ Prefix(w))
/// standard extension. Rejects empty or non-rich w.
Word std_ext(const Word& w, Side side, std::size_t j = 1);

/// Prefixes ux of v with ux != std_ext(u, right, 1). Rejects |v| <= 1 and
/// non-rich v.
WordSet flexed_points(const Word& v);

bool two_way_extendable(const Word& w, const Alphabet& alphabet);

/// Forced walk with a step budget (default |w|). Rejects empty or non-rich w.
ExtensionTrace omega(const Word& w, const Alphabet& alphabet,
                     std::optional<std::size_t> budget = std::nullopt);

/**
 * Length of the forced walk from the word held by `index`, or empty if it
 * exceeds `budget`. The index is restored before returning. Requires
 * index.rich() and a nonempty word.
 */
std::optional<std::size_t> forced_walk_length(PalIndex& index, std::size_t budget);

/// No v·t with t a proper prefix of u is two-way extendable. Requires v, u
/// nonempty and v·u rich; rejects otherwise.
bool unique_rich_extension(const Word& v, const Word& u, const Alphabet& alphabet);

/// (v, vbar, u) ∈ Γ: v·vbar·u is a unique rich extension of v·vbar and
/// lpps(v·vbar) = vbar. Empty components are rejected; a non-rich
/// concatenation is simply not a member.
bool gamma_check(const Word& v, const Word& vbar, const Word& u, const Alphabet& alphabet);
bool gamma_check(const GammaTriple& triple, const Alphabet& alphabet);

}  // namespace richwords
