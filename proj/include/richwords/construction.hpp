#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "richwords/word.hpp"

namespace richwords {

/**
 * Intermediates of one ewp(w, t) evaluation.
 *
 * sigma holds the lengths of the prefixes u of w with |u| >= |lppp(w)| that
 * end with rtrim(t). When sigma is nonempty, pi is the word with
 * lppp(w)·pi equal to the shortest of them. The extension is applied unless
 * t already occurs in pi^R·w.
 */
struct EwpContext {
  Word w;
  Word t;
  std::size_t lppp_length = 0;
  std::vector<std::size_t> sigma;
  std::optional<Word> pi;
  bool applied = false;
  Word result;
};

EwpContext ewp_context(const Word& w, const Word& t);

/// Extension with prefix: x·pi^R·w when applicable, else w. Requires w rich
/// and nonempty, t a nonempty rich palindrome.
Word ewp(const Word& w, const Word& t);
Word ewp_chain(const Word& w, std::span<const Word> ts);

/// Extension with letter-power prefix: ewp(w, y^(max_pow(w,y)+1)).
Word elpp(const Word& w, Symbol y);

/// g_1 = 1, g_n = g_{n-1}·0·1^n·0·g_{n-1}.
Word gen_g(std::size_t n);
/// |g_n|, from the recurrence rho(n) = 2 rho(n-1) + n + 2.
std::size_t rho(std::size_t n);

/// The palindromes α_{i,j}. i in 1..4; j >= 2 for i in {1,4}, j >= 3 for
/// i in {2,3} (those use g_{j-2}).
Word alpha(int i, std::size_t j);

/// κ(j, w) = elpp_0(ewp(w, α_{1,j}, α_{2,j}, α_{3,j}, α_{4,j})). j >= 3.
Word kappa(std::size_t j, const Word& w);

/// Per-stage length bookkeeping for κ(j, w) where w starts with 0^k g_j.
struct KappaStage {
  std::size_t j = 0;
  std::size_t k = 0;  // leading run of zeros of the stage input
  std::size_t input_length = 0;
  std::size_t output_length = 0;
  std::size_t stated_bound = 0;  // |w| + 7 rho(j-1) + 5k + 5j + 10
  std::size_t proved_bound = 0;  // same with 4k
  bool lpp_is_next_zero_power = false;  // lpp(κ(j,w)) = 0^{k+1}
};

struct ConstructionVerdicts {
  bool rich = false;
  bool unique_extension = false;
  bool bound_ok = false;
  bool ratio_ok = false;  // vacuous for n = 3
  bool kappa_bounds_ok = false;
  double ratio = 0.0;
  std::size_t forced_steps = 0;  // forced steps confirmed from h̄_n
  std::vector<std::string> failures;

  bool all_passed() const noexcept { return failures.empty(); }
};

struct ConstructionReport {
  std::size_t n = 0;
  Alphabet alphabet = Alphabet::standard(2);
  Word g_n;
  std::map<std::pair<int, std::size_t>, Word> alphas;
  std::vector<Word> kappa_stages;  // h_{n,n}, h_{n,n-1}, ..., h_{n,3}
  std::vector<KappaStage> kappa_checks;
  Word h_n;
  Word h_bar;  // h_n = h_bar · ltrim(g_n)
  std::size_t rho = 0;
  std::size_t bound = 0;  // ceil of (11/2)rho + (n-3)(5n+22) + 3n + 20 + q
  std::optional<ConstructionVerdicts> verdicts;

  double ratio() const;
};

/// Length bound for h_n rounded up; |h| < bound iff |h| is below the real bound.
std::size_t h_length_bound(std::size_t n, std::size_t q);

/// Builds h_n over `alphabet` (zero and one symbols are its first two).
ConstructionReport gen_h(std::size_t n, const Alphabet& alphabet);

/**
 * Checks h_n: richness, that h_n is a unique rich extension of h̄_n (every one
 * of the rho(n)-1 words from h̄_n up to rtrim(h_n) has a single rich
 * one-letter extension and it is the next letter of g_n), the length bound,
 * and ratio <= 2/9 for n > 3. Failures are named in the result.
 */
ConstructionVerdicts verify_h(const ConstructionReport& report);

/// 0^k g_n is rich and its flexed points beyond 0^k g_{n-1} are exactly
/// 0^k g_{n-1} 01 and 0^k g_{n-1} 0 1^n. Requires n, k >= 2.
bool flexed_delta_check(std::size_t n, std::size_t k);

/// Switches of 0^k g_n in closed form (n >= 3, k >= 2).
WordSet switch_formula(std::size_t n, std::size_t k);
/// Closed-form switch palindromic closures of 0^k g_n before reduction.
WordSet closure_formula(std::size_t n, std::size_t k);
/// New switches of 0^k g_n (not switches of 0^k g_{n-1}) that are suffixes of
/// the new flexed points.
WordSet top_switches(std::size_t n, std::size_t k);
/// {00 g_{n-1} 01, 0 1^{n-1} 0 g_{n-2} 0 1^n, 0 1^n}.
WordSet top_switch_formula(std::size_t n);

/// Brute-force switches and closures of 0^k g_n agree with the closed forms.
bool switch_formula_check(std::size_t n, std::size_t k);

}  // namespace richwords
