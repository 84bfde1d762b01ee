#include "seqrecon/word.hpp"

#include <algorithm>
#include <numeric>

#include "seqrecon/error.hpp"

namespace seqrecon {

void validate_alphabet(int q) {
  if (q < kMinAlphabet || q > kMaxAlphabet) {
    throw Error(ErrorCode::kDomain, "alphabet size " + std::to_string(q) +
                                        " outside supported range 2..6");
  }
}

namespace {

void validate_length(std::size_t n) {
  if (n > static_cast<std::size_t>(kMaxWordLength)) {
    throw Error(ErrorCode::kDomain, "word length " + std::to_string(n) +
                                        " exceeds maximum 64");
  }
}

}  // namespace

Word::Word(int q, std::span<const int> symbols) {
  validate_alphabet(q);
  validate_length(symbols.size());
  q_ = static_cast<std::uint8_t>(q);
  size_ = static_cast<std::uint8_t>(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i] < 0 || symbols[i] >= q) {
      throw Error(ErrorCode::kInvalidSymbol,
                  "symbol " + std::to_string(symbols[i]) + " at index " +
                      std::to_string(i) + " not in Z_" + std::to_string(q));
    }
    symbols_[i] = static_cast<Symbol>(symbols[i]);
  }
}

Word::Word(int q, std::initializer_list<int> symbols)
    : Word(q, std::span<const int>(symbols.begin(), symbols.size())) {}

Word Word::from_symbols_unchecked(int q, std::span<const Symbol> symbols) {
  Word w;
  w.q_ = static_cast<std::uint8_t>(q);
  w.size_ = static_cast<std::uint8_t>(symbols.size());
  std::copy(symbols.begin(), symbols.end(), w.symbols_.begin());
  return w;
}

Word Word::subword(int pos, int len) const {
  return from_symbols_unchecked(q_, symbols().subspan(pos, len));
}

Word Word::without(int pos) const {
  Word w = *this;
  std::copy(symbols_.begin() + pos + 1, symbols_.begin() + size_,
            w.symbols_.begin() + pos);
  w.symbols_[size_ - 1] = 0;
  --w.size_;
  return w;
}

Word Word::concat(const Word& other) const {
  if (other.q_ != q_) {
    throw Error(ErrorCode::kAlphabetMismatch, "concatenating words over Z_" +
                                                  std::to_string(q_) +
                                                  " and Z_" +
                                                  std::to_string(other.q_));
  }
  validate_length(static_cast<std::size_t>(size_) + other.size_);
  Word w = *this;
  std::copy(other.symbols_.begin(), other.symbols_.begin() + other.size_,
            w.symbols_.begin() + size_);
  w.size_ = static_cast<std::uint8_t>(size_ + other.size_);
  return w;
}

std::string Word::str() const {
  std::string s(size_, '0');
  for (int i = 0; i < size_; ++i) s[i] = static_cast<char>('0' + symbols_[i]);
  return s;
}

bool operator==(const Word& a, const Word& b) noexcept {
  return a.q_ == b.q_ && a.size_ == b.size_ &&
         std::equal(a.symbols_.begin(), a.symbols_.begin() + a.size_,
                    b.symbols_.begin());
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  auto sa = a.symbols();
  auto sb = b.symbols();
  if (auto c = std::lexicographical_compare_three_way(sa.begin(), sa.end(),
                                                      sb.begin(), sb.end());
      c != 0) {
    return c;
  }
  return a.q_ <=> b.q_;
}

Ordering::Ordering(std::vector<int> sigma) : sigma_(std::move(sigma)) {
  const int q = static_cast<int>(sigma_.size());
  validate_alphabet(q);
  std::vector<bool> seen(q, false);
  for (int s : sigma_) {
    if (s < 0 || s >= q || seen[s]) {
      throw Error(ErrorCode::kDomain, "ordering is not a permutation of Z_" +
                                          std::to_string(q));
    }
    seen[s] = true;
  }
}

Ordering Ordering::identity(int q) {
  validate_alphabet(q);
  std::vector<int> s(q);
  std::iota(s.begin(), s.end(), 0);
  return Ordering(std::move(s));
}

Ordering Ordering::cyclic_shift(int q, int shift) {
  validate_alphabet(q);
  std::vector<int> s(q);
  for (int i = 0; i < q; ++i) s[i] = ((i + shift) % q + q) % q;
  return Ordering(std::move(s));
}

Ordering Ordering::swap(int q, int a, int b) {
  std::vector<int> s = identity(q).values();
  std::swap(s.at(a), s.at(b));
  return Ordering(std::move(s));
}

Ordering Ordering::inverse() const {
  std::vector<int> inv(sigma_.size());
  for (std::size_t i = 0; i < sigma_.size(); ++i) inv[sigma_[i]] = static_cast<int>(i);
  return Ordering(std::move(inv));
}

Word RunDecomposition::expand() const {
  std::vector<Symbol> out;
  for (const Run& r : runs) out.insert(out.end(), r.length, r.symbol);
  return Word::from_symbols_unchecked(word.q(), out);
}

Word parse_word(std::string_view text, int q) {
  validate_alphabet(q);
  validate_length(text.size());
  std::vector<int> symbols;
  symbols.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::kParse, "non-digit character '" +
                                         std::string(1, c) + "' at index " +
                                         std::to_string(i));
    }
    if (c - '0' >= q) {
      throw Error(ErrorCode::kInvalidSymbol,
                  "symbol " + std::string(1, c) + " at index " +
                      std::to_string(i) + " not in Z_" + std::to_string(q));
    }
    symbols.push_back(c - '0');
  }
  return Word(q, symbols);
}

Word periodic_word(int n, const Ordering& sigma) {
  if (n < 0) throw Error(ErrorCode::kDomain, "negative word length");
  validate_length(static_cast<std::size_t>(n));
  const int q = sigma.q();
  std::vector<Symbol> s(n);
  for (int i = 0; i < n; ++i) s[i] = static_cast<Symbol>(sigma[i % q]);
  return Word::from_symbols_unchecked(q, s);
}

Word identity_periodic(int q, int n) {
  return periodic_word(n, Ordering::identity(q));
}

RunDecomposition runs(const Word& w) {
  RunDecomposition d{w, {}};
  for (int i = 0; i < w.size();) {
    int j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    d.runs.push_back(Run{w[i], i, j - i});
    i = j;
  }
  return d;
}

Word relabel(const Word& w, const Ordering& pi) {
  if (pi.q() != w.q()) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "relabeling over Z_" + std::to_string(pi.q()) +
                    " applied to a word over Z_" + std::to_string(w.q()));
  }
  std::array<Symbol, kMaxWordLength> s{};
  for (int i = 0; i < w.size(); ++i) s[i] = static_cast<Symbol>(pi[w[i]]);
  return Word::from_symbols_unchecked(w.q(), std::span(s.data(), w.size()));
}

Word reverse(const Word& w) {
  std::array<Symbol, kMaxWordLength> s{};
  auto src = w.symbols();
  std::reverse_copy(src.begin(), src.end(), s.begin());
  return Word::from_symbols_unchecked(w.q(), std::span(s.data(), w.size()));
}

bool is_periodic(const Word& w) {
  const int q = w.q();
  if (w.size() < q) {
    // A prefix of some ordering: all symbols distinct.
    std::vector<bool> seen(q, false);
    for (Symbol s : w.symbols()) {
      if (seen[s]) return false;
      seen[s] = true;
    }
    return true;
  }
  std::vector<bool> seen(q, false);
  for (int i = 0; i < q; ++i) {
    if (seen[w[i]]) return false;
    seen[w[i]] = true;
  }
  for (int i = q; i < w.size(); ++i) {
    if (w[i] != w[i - q]) return false;
  }
  return true;
}

Word relabel_normal_form(const Word& w) {
  std::array<int, kMaxAlphabet> map;
  map.fill(-1);
  int next = 0;
  std::array<Symbol, kMaxWordLength> s{};
  for (int i = 0; i < w.size(); ++i) {
    if (map[w[i]] < 0) map[w[i]] = next++;
    s[i] = static_cast<Symbol>(map[w[i]]);
  }
  return Word::from_symbols_unchecked(w.q(), std::span(s.data(), w.size()));
}

std::uint64_t word_count(int q, int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(c, static_cast<std::uint64_t>(q), &c)) {
      throw Error(ErrorCode::kOverflow, "q^n does not fit in 64 bits");
    }
  }
  return c;
}

std::uint64_t rank(const Word& w) {
  std::uint64_t r = 0;
  for (Symbol s : w.symbols()) r = r * w.q() + s;
  return r;
}

Word unrank(int q, int n, std::uint64_t r) {
  std::array<Symbol, kMaxWordLength> s{};
  for (int i = n - 1; i >= 0; --i) {
    s[i] = static_cast<Symbol>(r % q);
    r /= q;
  }
  return Word::from_symbols_unchecked(q, std::span(s.data(), n));
}

}  // namespace seqrecon
