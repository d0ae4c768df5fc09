#include <omp.h>

#include <chrono>
#include <exception>
#include <stdexcept>

#include "phi_kernel.hpp"

namespace richwords {

namespace {

// Shortest prefix length giving at least 8 candidate prefixes per shard.
std::size_t shard_prefix_length(std::size_t n, std::size_t q, std::size_t shards) {
  std::size_t length = 1;
  std::size_t reach = q;
  while (length < n && reach < 8 * shards) {
    ++length;
    reach *= q;
  }
  return length;
}

}  // namespace

PhiResult phi(std::size_t n, const Alphabet& alphabet, const PhiOptions& options) {
  if (n == 0) throw std::invalid_argument("phi: n must be >= 1");
  if (options.shards == 0) throw std::invalid_argument("phi: shards must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t q = alphabet.size();

  std::vector<Word> prefixes;
  enumerate_rich(shard_prefix_length(n, q, options.shards), alphabet,
                 [&](PalIndex& ix) { prefixes.push_back(ix.word()); }, options.canonical);

  const auto count = static_cast<std::ptrdiff_t>(prefixes.size());
  std::vector<detail::PhiAccumulator> partial(prefixes.size());
  std::vector<std::exception_ptr> errors(prefixes.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(options.shards))
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto slot = static_cast<std::size_t>(i);
    try {
      auto& acc = partial[slot];
      acc.cap = options.max_witnesses;
      PalIndex index(q, prefixes[slot]);
      auto visit = [&](PalIndex& ix) { detail::score(ix, n, alphabet, acc); };
      detail::extend_rich(index, n, options.canonical, detail::letters_in_use(index.letters()), visit);
    } catch (...) {
      errors[slot] = std::current_exception();
    }
  }

  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  detail::PhiAccumulator total;
  total.cap = options.max_witnesses;
  for (const auto& acc : partial) total.merge(acc);

  PhiResult result = detail::finish(total, n, alphabet);
  result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace richwords
