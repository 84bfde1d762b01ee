#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "seqrecon/word.hpp"
#include "seqrecon/word_set.hpp"

namespace seqrecon {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

// D_t(x): distinct length-(n-t) subsequences of x, in lexicographic order.
// Empty when t < 0 or t > n. Throws kResourceCap when min(q^(n-t), C(n,t))
// exceeds `cap`.
WordSet enumerate_ball(const Word& x, int t,
                       std::uint64_t cap = kDefaultEnumerationCap);

// Same set, generated level by level (one deletion per level) through a
// deduplicating set. Slow; kept as the reference the fast paths are tested
// against.
WordSet enumerate_ball_reference(const Word& x, int t,
                                 std::uint64_t cap = kDefaultEnumerationCap);

// |D_t(x)| without enumeration.
std::uint64_t ball_size(const Word& x, int t);

// D_tx(x) ∩ D_ty(y). Empty (not an error) when |x| - tx != |y| - ty.
WordSet intersect_balls(const Word& x, int tx, const Word& y, int ty,
                        std::uint64_t cap = kDefaultEnumerationCap);

// |D_tx(x) ∩ D_ty(y)| without materializing either set.
std::uint64_t intersection_size(const Word& x, int tx, const Word& y, int ty);

int lcs_length(const Word& x, const Word& y);

// Deletion-only Levenshtein distance: the shorter length minus the LCS.
// Arguments may be given in either order.
int deletion_distance(const Word& x, const Word& y);

// True iff `sub` is a subsequence of `w`.
bool is_subsequence(const Word& sub, const Word& w);

// Reusable scratch for counting common subsequences of one fixed word
// against many partners. Not thread-safe; use one per worker.
//
// Counts are numbers of distinct subsequences of words of length <= 64 and
// are bounded by C(64, 32) < 2^64, so plain 64-bit adds cannot overflow.
class PairCounter {
 public:
  void set_first(std::span<const Symbol> x, int q);

  // Number of distinct common subsequences of length `length` of the first
  // word and `y`.
  std::uint64_t count(std::span<const Symbol> y, int length);

  int lcs(std::span<const Symbol> y);

 private:
  using NextTable = std::vector<std::array<std::uint8_t, kMaxAlphabet>>;

  int q_ = 0;
  int nx_ = 0;
  NextTable next_x_;
  NextTable next_y_;
  std::vector<std::uint64_t> prev_;
  std::vector<std::uint64_t> cur_;
  std::vector<int> lcs_row_;
  std::array<std::uint8_t, kMaxWordLength> x_{};
};

}  // namespace seqrecon
