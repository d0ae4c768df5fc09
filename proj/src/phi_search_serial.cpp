#include <chrono>
#include <stdexcept>

#include "phi_kernel.hpp"

namespace richwords {

std::size_t enumerate_rich(std::size_t n, const Alphabet& alphabet, const RichVisitor& visit,
                           bool canonical) {
  if (n == 0) throw std::invalid_argument("enumerate_rich: n must be >= 1");
  PalIndex index(alphabet.size());
  std::size_t visited = 0;
  auto counting = [&](PalIndex& ix) {
    ++visited;
    visit(ix);
  };
  detail::extend_rich(index, n, canonical, 0, counting);
  return visited;
}

PhiResult phi_serial(std::size_t n, const Alphabet& alphabet, const PhiOptions& options) {
  if (n == 0) throw std::invalid_argument("phi: n must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  detail::PhiAccumulator acc;
  acc.cap = options.max_witnesses;
  PalIndex index(alphabet.size());
  auto visit = [&](PalIndex& ix) { detail::score(ix, n, alphabet, acc); };
  detail::extend_rich(index, n, options.canonical, 0, visit);
  PhiResult result = detail::finish(acc, n, alphabet);
  result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace richwords
