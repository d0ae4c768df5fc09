#include "richwords/pal_index.hpp"

#include <stdexcept>

namespace richwords {

namespace {
constexpr std::int32_t kImaginaryRoot = 0;  // length -1
constexpr std::int32_t kEmptyRoot = 1;      // length 0
}  // namespace

PalIndex::PalIndex(std::size_t alphabet_size) : q_(alphabet_size) {
  if (q_ == 0) throw std::invalid_argument("PalIndex: empty alphabet");
  len_ = {-1, 0};
  link_ = {kImaginaryRoot, kImaginaryRoot};
  next_.assign(2 * q_, -1);
}

PalIndex::PalIndex(std::size_t alphabet_size, const Word& w) : PalIndex(alphabet_size) {
  word_.reserve(w.size());
  len_.reserve(w.size() + 2);
  link_.reserve(w.size() + 2);
  next_.reserve((w.size() + 2) * q_);
  journal_.reserve(w.size());
  for (auto x : w) append(x);
}

std::int32_t PalIndex::find_extendable(std::int32_t node, Symbol x) const {
  // Walk suffix links until node's palindrome is preceded by x.
  const auto pos = static_cast<std::int64_t>(word_.size()) - 1;
  while (true) {
    const std::int64_t before = pos - len_[node] - 1;
    if (before >= 0 && word_[static_cast<std::size_t>(before)] == x) return node;
    if (node == kImaginaryRoot) return node;
    node = link_[node];
  }
}

bool PalIndex::append(Symbol x) {
  if (x >= q_) throw std::invalid_argument("PalIndex::append: symbol outside the alphabet");
  word_.push_back(x);
  const std::int32_t parent = find_extendable(last_, x);
  const std::int32_t existing = edge(parent, x);
  if (existing != -1) {
    journal_.push_back({last_, -1});
    last_ = existing;
    ++repeats_;
    return false;
  }

  const std::int32_t node = static_cast<std::int32_t>(len_.size());
  const std::int32_t length = len_[parent] + 2;
  std::int32_t link = kEmptyRoot;
  if (length > 1) link = edge(find_extendable(link_[parent], x), x);
  len_.push_back(length);
  link_.push_back(link);
  next_.resize(next_.size() + q_, -1);
  edge(parent, x) = node;

  journal_.push_back({last_, parent});
  last_ = node;
  return true;
}

void PalIndex::rollback(std::size_t steps) {
  if (steps > journal_.size()) throw std::invalid_argument("PalIndex::rollback: too many steps");
  for (; steps > 0; --steps) {
    const JournalEntry entry = journal_.back();
    journal_.pop_back();
    const Symbol x = word_.back();
    word_.pop_back();
    if (entry.parent == -1) {
      --repeats_;
    } else {
      edge(entry.parent, x) = -1;
      len_.pop_back();
      link_.pop_back();
      next_.resize(next_.size() - q_);
    }
    last_ = entry.previous_last;
  }
}

bool PalIndex::probe(Symbol x) {
  const bool created = append(x);
  rollback(1);
  return created;
}

std::size_t PalIndex::lpps_length() const {
  if (word_.empty()) throw std::logic_error("lpps of the empty word");
  if (lps_length() < word_.size()) return lps_length();
  return static_cast<std::size_t>(len_[link_[last_]]);
}

Symbol PalIndex::right_standard_letter() const {
  const std::size_t p = lpps_length();
  return word_[word_.size() - p - 1];
}

}  // namespace richwords
