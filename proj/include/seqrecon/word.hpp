#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seqrecon {

inline constexpr int kMinAlphabet = 2;
inline constexpr int kMaxAlphabet = 6;
inline constexpr int kMaxWordLength = 64;

using Symbol = std::uint8_t;

// A finite word over {0, ..., q-1}. Fixed-capacity inline storage, so words
// are trivially copyable values that can be handed to worker threads freely.
class Word {
 public:
  Word() = default;

  // Throws Error(kInvalidSymbol / kDomain) on bad input.
  Word(int q, std::span<const int> symbols);
  Word(int q, std::initializer_list<int> symbols);

  // Unchecked construction from raw symbols; caller guarantees s < q.
  static Word from_symbols_unchecked(int q, std::span<const Symbol> symbols);

  int q() const noexcept { return q_; }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  Symbol operator[](int i) const noexcept { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept {
    return {symbols_.data(), static_cast<std::size_t>(size_)};
  }

  Word subword(int pos, int len) const;
  Word without(int pos) const;
  Word concat(const Word& other) const;

  // Canonical digit-string form, e.g. "012012".
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) noexcept;
  friend std::strong_ordering operator<=>(const Word& a,
                                          const Word& b) noexcept;

 private:
  std::array<Symbol, kMaxWordLength> symbols_{};
  std::uint8_t size_ = 0;
  std::uint8_t q_ = kMinAlphabet;
};

// A permutation of {0, ..., q-1}.
class Ordering {
 public:
  explicit Ordering(std::vector<int> sigma);

  static Ordering identity(int q);
  // s -> (s + shift) mod q
  static Ordering cyclic_shift(int q, int shift);
  static Ordering swap(int q, int a, int b);

  int q() const noexcept { return static_cast<int>(sigma_.size()); }
  int operator[](int i) const { return sigma_[i]; }
  const std::vector<int>& values() const noexcept { return sigma_; }
  Ordering inverse() const;

  friend bool operator==(const Ordering&, const Ordering&) = default;

 private:
  std::vector<int> sigma_;
};

struct Run {
  Symbol symbol;
  int start;
  int length;

  friend bool operator==(const Run&, const Run&) = default;
};

struct RunDecomposition {
  Word word;
  std::vector<Run> runs;

  Word expand() const;
};

void validate_alphabet(int q);

Word parse_word(std::string_view text, int q);
Word periodic_word(int n, const Ordering& sigma);
// c_q(n, I_q) = (0, 1, ..., q-1, 0, 1, ...)
Word identity_periodic(int q, int n);
RunDecomposition runs(const Word& w);
Word relabel(const Word& w, const Ordering& pi);
Word reverse(const Word& w);

// True iff w = periodic_word(n, sigma) for some ordering sigma.
bool is_periodic(const Word& w);

// Lexicographically least relabeling: symbols renamed in order of first
// appearance.
Word relabel_normal_form(const Word& w);

// Base-q rank with the first symbol most significant; rank order equals
// lexicographic order for words of one length.
std::uint64_t rank(const Word& w);
Word unrank(int q, int n, std::uint64_t r);

// q^n, throwing kOverflow if it does not fit.
std::uint64_t word_count(int q, int n);

}  // namespace seqrecon
