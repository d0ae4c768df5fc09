#include "richwords/construction.hpp"

#include <algorithm>
#include <stdexcept>

#include "richwords/extension.hpp"
#include "richwords/pal_index.hpp"
#include "richwords/richness.hpp"
#include "richwords/switches.hpp"

namespace richwords {

namespace {

Word zeros(std::size_t n) { return Word::repeat(Alphabet::zero, n); }
Word ones(std::size_t n) { return Word::repeat(Alphabet::one, n); }

std::size_t leading_zeros(const Word& w) {
  std::size_t k = 0;
  while (k < w.size() && w[k] == Alphabet::zero) ++k;
  return k;
}

// ewp without input validation. The h_n pipeline calls this on words of
// up to ~10^6 letters; every step is linear.
Word ewp_unchecked(const Word& w, const Word& t, EwpContext* ctx) {
  const std::size_t lppp = affix_length(w, Affix::lppp);
  const Word r = t.substr(0, t.size() - 1);
  const std::size_t from = lppp >= r.size() ? lppp - r.size() : 0;

  if (ctx != nullptr) {
    ctx->w = w;
    ctx->t = t;
    ctx->lppp_length = lppp;
    if (r.empty()) {
      for (std::size_t m = lppp; m <= w.size(); ++m) ctx->sigma.push_back(m);
    } else {
      for (auto pos : occurrences(w, r)) {
        if (pos >= from) ctx->sigma.push_back(pos + r.size());
      }
    }
  }

  std::size_t shortest = lppp;
  if (!r.empty()) {
    const auto pos = find(w, r, from);
    if (!pos) {
      if (ctx != nullptr) ctx->result = w;
      return w;
    }
    shortest = *pos + r.size();
  }
  Word pi = w.substr(lppp, shortest - lppp);
  Word candidate = reverse(pi) + w;
  if (ctx != nullptr) ctx->pi = pi;
  // The guard "t not a factor of v^R w" binds v to pi.
  if (is_factor(candidate, t)) {
    if (ctx != nullptr) ctx->result = w;
    return w;
  }
  Word out = t.front() + candidate;
  if (ctx != nullptr) {
    ctx->applied = true;
    ctx->result = out;
  }
  return out;
}

void require_rich_word(const Word& w, const char* what) {
  if (w.empty()) throw std::invalid_argument(std::string(what) + ": word must be nonempty");
  if (!rich(w)) throw std::invalid_argument(std::string(what) + ": word is not rich");
}

void require_rich_palindrome(const Word& t, const char* what) {
  if (t.empty()) throw std::invalid_argument(std::string(what) + ": t must be nonempty");
  if (!is_palindrome(t)) throw std::invalid_argument(std::string(what) + ": t is not a palindrome");
  if (!rich(t)) throw std::invalid_argument(std::string(what) + ": t is not rich");
}

Word elpp_unchecked(const Word& w, Symbol y) {
  return ewp_unchecked(w, Word::repeat(y, max_pow(w, y) + 1), nullptr);
}

struct Alphas {
  std::map<std::pair<int, std::size_t>, Word> table;
  const Word& at(int i, std::size_t j) {
    auto it = table.find({i, j});
    if (it == table.end()) it = table.emplace(std::make_pair(i, j), alpha(i, j)).first;
    return it->second;
  }
};

Word kappa_unchecked(std::size_t j, const Word& w, Alphas& alphas) {
  Word out = w;
  for (int i = 1; i <= 4; ++i) out = ewp_unchecked(out, alphas.at(i, j), nullptr);
  return elpp_unchecked(out, Alphabet::zero);
}

}  // namespace

EwpContext ewp_context(const Word& w, const Word& t) {
  require_rich_word(w, "ewp");
  require_rich_palindrome(t, "ewp");
  EwpContext ctx;
  ewp_unchecked(w, t, &ctx);
  return ctx;
}

Word ewp(const Word& w, const Word& t) {
  require_rich_word(w, "ewp");
  require_rich_palindrome(t, "ewp");
  return ewp_unchecked(w, t, nullptr);
}

Word ewp_chain(const Word& w, std::span<const Word> ts) {
  Word out = w;
  for (const auto& t : ts) out = ewp(out, t);
  return out;
}

Word elpp(const Word& w, Symbol y) {
  require_rich_word(w, "elpp");
  return elpp_unchecked(w, y);
}

Word gen_g(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gen_g: n must be >= 1");
  Word g{Alphabet::one};
  for (std::size_t i = 2; i <= n; ++i) {
    Word next = g;
    next.reserve(2 * g.size() + i + 2);
    next += Alphabet::zero;
    next += ones(i);
    next += Alphabet::zero;
    next += g;
    g = std::move(next);
  }
  return g;
}

std::size_t rho(std::size_t n) {
  if (n == 0) throw std::invalid_argument("rho: n must be >= 1");
  std::size_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r = 2 * r + i + 2;
  return r;
}

Word alpha(int i, std::size_t j) {
  if (i < 1 || i > 4) throw std::invalid_argument("alpha: i must be in 1..4");
  if (j < 2) throw std::invalid_argument("alpha: j must be >= 2");
  if ((i == 2 || i == 3) && j < 3) throw std::invalid_argument("alpha: i in {2,3} needs j >= 3");
  switch (i) {
    case 1:
      return zeros(2) + gen_g(j - 1) + zeros(2);
    case 2:
      return Alphabet::zero + ones(j - 1) + Alphabet::zero + gen_g(j - 2) + Alphabet::zero +
             ones(j - 1) + Alphabet::zero;
    case 3:
      return ones(j) + Alphabet::zero + gen_g(j - 2) + Alphabet::zero + ones(j);
    default:
      return ones(j + 1);
  }
}

Word kappa(std::size_t j, const Word& w) {
  if (j < 3) throw std::invalid_argument("kappa: j must be >= 3");
  require_rich_word(w, "kappa");
  Alphas alphas;
  return kappa_unchecked(j, w, alphas);
}

double ConstructionReport::ratio() const {
  return static_cast<double>(rho - 1) / static_cast<double>(h_bar.size());
}

std::size_t h_length_bound(std::size_t n, std::size_t q) {
  const std::size_t r = rho(n);
  // ceil(11 r / 2) keeps the strict comparison exact for odd r.
  return (11 * r + 1) / 2 + (n - 3) * (5 * n + 22) + 3 * n + 20 + q;
}

ConstructionReport gen_h(std::size_t n, const Alphabet& alphabet) {
  if (n < 3) throw std::invalid_argument("gen_h: n must be >= 3");
  ConstructionReport report;
  report.n = n;
  report.alphabet = alphabet;
  report.g_n = gen_g(n);
  report.rho = report.g_n.size();
  report.bound = h_length_bound(n, alphabet.size());

  Alphas alphas;
  for (std::size_t j = 3; j <= n; ++j) {
    for (int i = 1; i <= 4; ++i) report.alphas.emplace(std::make_pair(i, j), alphas.at(i, j));
  }

  Word current = zeros(3) + report.g_n + zeros(2) + report.g_n;
  for (std::size_t j = n; j >= 3; --j) {
    KappaStage stage;
    stage.j = j;
    stage.k = leading_zeros(current);
    stage.input_length = current.size();
    current = kappa_unchecked(j, current, alphas);
    stage.output_length = current.size();
    const std::size_t base = stage.input_length + 7 * rho(j - 1) + 5 * j + 10;
    stage.stated_bound = base + 5 * stage.k;
    stage.proved_bound = base + 4 * stage.k;
    stage.lpp_is_next_zero_power = leading_zeros(current) >= stage.k + 1 &&
                                   affix_length(current, Affix::lpp) == stage.k + 1;
    report.kappa_checks.push_back(stage);
    report.kappa_stages.push_back(current);
  }

  const Word closing[] = {parse_digits("00100"), parse_digits("11011"), parse_digits("01010")};
  Word tail = current;
  for (const auto& t : closing) tail = ewp_unchecked(tail, t, nullptr);

  Word h;
  h.reserve(tail.size() + alphabet.size());
  for (std::size_t x = 2; x < alphabet.size(); ++x) h.push_back(static_cast<Symbol>(x));
  h += tail;
  report.h_n = std::move(h);
  report.h_bar = report.h_n.substr(0, report.h_n.size() - (report.rho - 1));
  return report;
}

ConstructionVerdicts verify_h(const ConstructionReport& report) {
  ConstructionVerdicts v;
  const std::size_t q = report.alphabet.size();
  const Word tail = trim(report.g_n, Side::left);

  PalIndex index(q, report.h_n);
  v.rich = index.rich();
  if (!v.rich) v.failures.emplace_back("h_n is not rich");

  const bool shape_ok = report.h_bar.size() + tail.size() == report.h_n.size() &&
                        is_suffix(report.h_n, tail) && is_prefix(report.h_n, report.h_bar);
  if (v.rich && shape_ok) {
    index.rollback(tail.size());
    v.unique_extension = true;
    for (auto next : tail) {
      std::size_t found = 0;
      Symbol only = 0;
      for (std::size_t x = 0; x < q; ++x) {
        if (index.probe(static_cast<Symbol>(x))) {
          only = static_cast<Symbol>(x);
          ++found;
        }
      }
      if (found != 1 || only != next) {
        v.unique_extension = false;
        break;
      }
      index.append(next);
      ++v.forced_steps;
    }
  }
  if (!v.unique_extension) v.failures.emplace_back("h_n is not a unique rich extension of h_bar");

  v.bound_ok = report.h_n.size() < report.bound;
  if (!v.bound_ok) v.failures.emplace_back("|h_n| is not below the length bound");

  v.ratio = report.ratio();
  v.ratio_ok = report.n <= 3 || 9.0 * static_cast<double>(report.rho - 1) <= 2.0 * static_cast<double>(report.h_bar.size());
  if (!v.ratio_ok) v.failures.emplace_back("ratio exceeds 2/9");

  v.kappa_bounds_ok = std::all_of(report.kappa_checks.begin(), report.kappa_checks.end(),
                                  [](const KappaStage& s) { return s.output_length < s.stated_bound; });
  if (!v.kappa_bounds_ok) v.failures.emplace_back("a kappa stage exceeds its length bound");
  return v;
}

bool flexed_delta_check(std::size_t n, std::size_t k) {
  if (n < 2 || k < 2) throw std::invalid_argument("flexed_delta_check: n and k must be >= 2");
  const Word previous = zeros(k) + gen_g(n - 1);
  const Word word = zeros(k) + gen_g(n);
  if (!rich(word)) return false;
  const WordSet before = flexed_points(previous);
  WordSet added;
  for (const auto& p : flexed_points(word)) {
    if (!before.contains(p)) added.insert(p);
  }
  const WordSet expected{previous + Alphabet::zero + Alphabet::one,
                         previous + Alphabet::zero + ones(n)};
  return added == expected;
}

WordSet switch_formula(std::size_t n, std::size_t k) {
  if (n < 3 || k < 2) throw std::invalid_argument("switch_formula: needs n >= 3 and k >= 2");
  WordSet s;
  for (std::size_t i = 1; i <= k; ++i) s.insert(zeros(i) + Alphabet::one);
  for (const char* fixed : {"10", "011", "110", "00101", "11010", "01011"}) s.insert(parse_digits(fixed));
  const Word zero{Alphabet::zero};
  for (std::size_t i = 3; i <= n; ++i) {
    const Word g1 = gen_g(i - 1);
    const Word g2 = gen_g(i - 2);
    s.insert(zeros(2) + g1 + zero + Alphabet::one);
    s.insert(zero + ones(i - 1) + zero + g2 + zero + ones(i));
    s.insert(ones(i) + zero + g2 + zero + ones(i - 1) + zero);
    s.insert(zero + ones(i));
    s.insert(ones(i) + zero);
  }
  return s;
}

WordSet closure_formula(std::size_t n, std::size_t k) {
  if (n < 3 || k < 2) throw std::invalid_argument("closure_formula: needs n >= 3 and k >= 2");
  WordSet s{zeros(k + 1), parse_digits("00100"), parse_digits("11011"), parse_digits("01010"),
            alpha(4, n)};
  for (std::size_t j = 3; j <= n; ++j) {
    for (int i = 1; i <= 3; ++i) s.insert(alpha(i, j));
  }
  return s;
}

WordSet top_switches(std::size_t n, std::size_t k) {
  if (n < 3 || k < 2) throw std::invalid_argument("top_switches: needs n >= 3 and k >= 2");
  const Word previous = zeros(k) + gen_g(n - 1);
  const Word word = zeros(k) + gen_g(n);
  const SwitchSet old_switches = switches_of(previous);
  const WordSet before = flexed_points(previous);
  std::vector<Word> added_points;
  for (const auto& p : flexed_points(word)) {
    if (!before.contains(p)) added_points.push_back(p);
  }
  WordSet out;
  for (const auto& [t, pos] : switches_of(word)) {
    if (old_switches.contains(t)) continue;
    if (std::any_of(added_points.begin(), added_points.end(),
                    [&](const Word& p) { return is_suffix(p, t); })) {
      out.insert(t);
    }
  }
  return out;
}

WordSet top_switch_formula(std::size_t n) {
  if (n < 3) throw std::invalid_argument("top_switch_formula: n must be >= 3");
  const Word zero{Alphabet::zero};
  return WordSet{zeros(2) + gen_g(n - 1) + zero + Alphabet::one,
                 zero + ones(n - 1) + zero + gen_g(n - 2) + zero + ones(n), zero + ones(n)};
}

bool switch_formula_check(std::size_t n, std::size_t k) {
  const WordSet brute = switches_of(zeros(k) + gen_g(n)).words();
  return brute == switch_formula(n, k) && swc_set(brute) == reduced(closure_formula(n, k)) &&
         top_switches(n, k) == top_switch_formula(n);
}

}  // namespace richwords
