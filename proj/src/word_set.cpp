#include "seqrecon/word_set.hpp"

#include <algorithm>
#include <iterator>

#include "seqrecon/error.hpp"

namespace seqrecon {

WordSet::WordSet(int q, int member_length, std::vector<Word> members)
    : q_(q), member_length_(member_length), members_(std::move(members)) {
  for (const Word& w : members_) {
    if (w.q() != q_) {
      throw Error(ErrorCode::kAlphabetMismatch,
                  "word " + w.str() + " is not over Z_" + std::to_string(q_));
    }
    if (w.size() != member_length_) {
      throw Error(ErrorCode::kLengthMismatch,
                  "word " + w.str() + " does not have length " +
                      std::to_string(member_length_));
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

WordSet WordSet::from_sorted_unchecked(int q, int member_length,
                                       std::vector<Word> members) {
  WordSet s(q, member_length);
  s.members_ = std::move(members);
  return s;
}

bool WordSet::contains(const Word& w) const {
  return std::binary_search(members_.begin(), members_.end(), w);
}

std::vector<std::string> WordSet::strings() const {
  std::vector<std::string> out;
  out.reserve(members_.size());
  for (const Word& w : members_) out.push_back(w.str());
  return out;
}

WordSet set_intersection(const WordSet& a, const WordSet& b) {
  if (a.member_length() != b.member_length()) {
    return WordSet(a.q(), a.member_length());
  }
  std::vector<Word> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return WordSet::from_sorted_unchecked(a.q(), a.member_length(),
                                        std::move(out));
}

bool is_subset(const WordSet& sub, const WordSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace seqrecon
