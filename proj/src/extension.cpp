#include "richwords/extension.hpp"

#include <stdexcept>

#include "richwords/richness.hpp"

namespace richwords {

namespace {

PalIndex rich_index(const Word& w, std::size_t q, const char* what) {
  PalIndex index(q, w);
  if (!index.rich()) throw std::invalid_argument(std::string(what) + ": word is not rich");
  return index;
}

// Rich one-letter extensions of the indexed word, stopping after two.
std::size_t count_extensions(PalIndex& index, Symbol& first, Symbol& second) {
  std::size_t found = 0;
  for (std::size_t x = 0; x < index.alphabet_size() && found < 2; ++x) {
    if (index.probe(static_cast<Symbol>(x))) {
      (found == 0 ? first : second) = static_cast<Symbol>(x);
      ++found;
    }
  }
  return found;
}

}  // namespace

Word ExtensionTrace::path() const {
  Word out;
  for (const auto& step : steps) out.push_back(step.letter);
  return out;
}

Word std_ext(const Word& w, Side side, std::size_t j) {
  if (w.empty()) throw std::invalid_argument("std_ext: word must be nonempty");
  if (side == Side::left) return reverse(std_ext(reverse(w), Side::right, j));
  PalIndex index = rich_index(w, symbol_span(w), "std_ext");
  for (std::size_t i = 0; i < j; ++i) index.append(index.right_standard_letter());
  return index.word();
}

WordSet flexed_points(const Word& v) {
  if (v.size() <= 1) throw std::invalid_argument("flexed_points: word must have length > 1");
  PalIndex index(symbol_span(v));
  WordSet out;
  index.append(v[0]);
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] != index.right_standard_letter()) out.insert(v.substr(0, i + 1));
    if (!index.append(v[i])) throw std::invalid_argument("flexed_points: word is not rich");
  }
  return out;
}

bool two_way_extendable(const Word& w, const Alphabet& alphabet) {
  return rich_extension_letters(w, alphabet).size() >= 2;
}

std::optional<std::size_t> forced_walk_length(PalIndex& index, std::size_t budget) {
  std::size_t steps = 0;
  Symbol first = 0;
  Symbol second = 0;
  std::optional<std::size_t> result;
  while (true) {
    const std::size_t found = count_extensions(index, first, second);
    if (found >= 2) {
      result = steps;
      break;
    }
    if (found == 0) {
      index.rollback(steps);
      throw std::logic_error("rich word without a rich extension");
    }
    if (steps == budget) break;
    index.append(first);
    ++steps;
  }
  index.rollback(steps);
  return result;
}

ExtensionTrace omega(const Word& w, const Alphabet& alphabet, std::optional<std::size_t> budget) {
  if (w.empty()) throw std::invalid_argument("omega: word must be nonempty");
  if (!alphabet.contains(w)) throw std::invalid_argument("omega: word uses symbols outside the alphabet");
  PalIndex index = rich_index(w, alphabet.size(), "omega");
  const std::size_t limit = budget.value_or(w.size());

  ExtensionTrace trace;
  trace.base = w;
  Symbol first = 0;
  Symbol second = 0;
  while (true) {
    const std::size_t found = count_extensions(index, first, second);
    if (found >= 2) {
      trace.omega = trace.steps.size();
      trace.branch_witness = std::make_pair(first, second);
      return trace;
    }
    if (found == 0) throw std::logic_error("rich word without a rich extension");
    if (trace.steps.size() == limit) return trace;
    index.append(first);
    trace.steps.push_back({first, true});
  }
}

bool unique_rich_extension(const Word& v, const Word& u, const Alphabet& alphabet) {
  if (v.empty() || u.empty()) throw std::invalid_argument("unique_rich_extension: v and u must be nonempty");
  const Word vu = v + u;
  if (!alphabet.contains(vu)) throw std::invalid_argument("unique_rich_extension: symbols outside the alphabet");
  PalIndex index = rich_index(vu, alphabet.size(), "unique_rich_extension");
  index.rollback(u.size());
  Symbol first = 0;
  Symbol second = 0;
  for (auto x : u) {
    if (count_extensions(index, first, second) >= 2) return false;
    index.append(x);
  }
  return true;
}

bool gamma_check(const Word& v, const Word& vbar, const Word& u, const Alphabet& alphabet) {
  if (v.empty() || vbar.empty() || u.empty()) {
    throw std::invalid_argument("gamma_check: components must be nonempty");
  }
  const Word head = v + vbar;
  if (affix_length(head, Affix::lpps) != vbar.size() || !is_suffix(head, vbar)) return false;
  if (!rich(head + u)) return false;
  return unique_rich_extension(head, u, alphabet);
}

bool gamma_check(const GammaTriple& triple, const Alphabet& alphabet) {
  return gamma_check(triple.v, triple.vbar, triple.u, alphabet);
}

}  // namespace richwords
