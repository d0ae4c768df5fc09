#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "richwords/pal_index.hpp"
#include "richwords/word.hpp"

namespace richwords {

struct PhiOptions {
  /// Worker count for the OpenMP search. The serial reference ignores it.
  std::size_t shards = 1;
  /// Only enumerate words whose new letters appear in alphabet order
  /// (one representative per alphabet permutation).
  bool canonical = false;
  /// Keep the lexicographically first `max_witnesses` witnesses; 0 keeps all.
  std::size_t max_witnesses = 0;
};

struct PhiResult {
  std::size_t n = 0;
  std::size_t q = 0;
  std::size_t phi = 0;
  std::vector<std::string> witnesses;  // sorted by symbol order
  std::size_t enumerated = 0;
  double wall_time_s = 0.0;

  /// Everything except wall time.
  bool same_outcome(const PhiResult& other) const {
    return n == other.n && q == other.q && phi == other.phi && witnesses == other.witnesses &&
           enumerated == other.enumerated;
  }
  friend bool operator==(const PhiResult&, const PhiResult&) = default;
};

/// Raised when a rich word of length n has a forced walk longer than n.
class FalsificationError : public std::runtime_error {
 public:
  explicit FalsificationError(std::string word)
      : std::runtime_error("forced extension walk exceeds |w| for " + word), word_(std::move(word)) {}
  const std::string& word() const noexcept { return word_; }

 private:
  std::string word_;
};

/// Called once per rich word of the requested length with the index holding it.
using RichVisitor = std::function<void(PalIndex&)>;

/**
 * Depth-first enumeration of the rich words of length n, in lexicographic
 * symbol order. A branch is cut as soon as an append repeats its longest
 * palindromic suffix. Returns the number of words visited.
 */
std::size_t enumerate_rich(std::size_t n, const Alphabet& alphabet, const RichVisitor& visit,
                           bool canonical = false);

/// Serial reference: one DFS, no threads.
PhiResult phi_serial(std::size_t n, const Alphabet& alphabet, const PhiOptions& options = {});

/**
 * OpenMP search. Rich prefixes of a fixed length are distributed over
 * `options.shards` threads, each with a private PalIndex; per-prefix results
 * are merged in prefix order, so the outcome does not depend on the shard
 * count.
 */
PhiResult phi(std::size_t n, const Alphabet& alphabet, const PhiOptions& options = {});

/// Appends one JSON line.
void cache_store(const PhiResult& record, const std::filesystem::path& path);

/// Newest record for (n, q). Malformed lines are skipped with a warning on
/// stderr. A missing file is an empty cache.
std::optional<PhiResult> cache_lookup(std::size_t n, std::size_t q, const std::filesystem::path& path);

}  // namespace richwords
