#pragma once

#include <string>
#include <vector>

#include "seqrecon/word.hpp"

namespace seqrecon {

// Deduplicated, lexicographically ordered collection of equal-length words.
class WordSet {
 public:
  WordSet(int q, int member_length) : q_(q), member_length_(member_length) {}
  // Sorts and deduplicates; throws if a member has the wrong q or length.
  WordSet(int q, int member_length, std::vector<Word> members);

  // Members already sorted and unique (generator output).
  static WordSet from_sorted_unchecked(int q, int member_length,
                                       std::vector<Word> members);

  int q() const noexcept { return q_; }
  int member_length() const noexcept { return member_length_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const Word& w) const;

  const std::vector<Word>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  std::vector<std::string> strings() const;

  friend bool operator==(const WordSet&, const WordSet&) = default;

 private:
  int q_;
  int member_length_;
  std::vector<Word> members_;
};

WordSet set_intersection(const WordSet& a, const WordSet& b);
bool is_subset(const WordSet& sub, const WordSet& super);

}  // namespace seqrecon
