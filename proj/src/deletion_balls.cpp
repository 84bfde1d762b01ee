#include "seqrecon/deletion_balls.hpp"

#include <algorithm>
#include <set>

#include "seqrecon/error.hpp"

namespace seqrecon {

namespace {

using NextRow = std::array<std::uint8_t, kMaxAlphabet>;

// next[i][a] = least p >= i with s[p] == a, or n when there is none.
void build_next(std::span<const Symbol> s, std::vector<NextRow>& next) {
  const int n = static_cast<int>(s.size());
  next.resize(n + 1);
  next[n].fill(static_cast<std::uint8_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    next[i] = next[i + 1];
    next[i][s[i]] = static_cast<std::uint8_t>(i);
  }
}

std::uint64_t saturating_pow(int q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, static_cast<std::uint64_t>(q), &r)) {
      return UINT64_MAX;
    }
  }
  return r;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (c > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(c);
}

void check_cap(std::uint64_t bound, std::uint64_t cap) {
  if (bound > cap) {
    throw Error(ErrorCode::kResourceCap,
                "enumeration bound " + std::to_string(bound) +
                    " exceeds cap " + std::to_string(cap));
  }
}

void check_same_alphabet(const Word& x, const Word& y) {
  if (x.q() != y.q()) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "words over Z_" + std::to_string(x.q()) + " and Z_" +
                    std::to_string(y.q()));
  }
}

// Emits every distinct length-`remaining` subsequence of s[i..] exactly once,
// in lexicographic order, by always embedding each symbol at its first
// occurrence.
void emit_subsequences(const std::vector<NextRow>& next, int n, int q, int i,
                       int remaining, std::vector<Symbol>& prefix,
                       std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(Word::from_symbols_unchecked(q, prefix));
    return;
  }
  for (int a = 0; a < q; ++a) {
    const int p = next[i][a];
    if (p >= n || n - (p + 1) < remaining - 1) continue;
    prefix.push_back(static_cast<Symbol>(a));
    emit_subsequences(next, n, q, p + 1, remaining - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

WordSet enumerate_ball(const Word& x, int t, std::uint64_t cap) {
  const int n = x.size();
  if (t < 0 || t > n) return WordSet(x.q(), std::max(n - t, 0));
  const int length = n - t;
  check_cap(std::min(saturating_pow(x.q(), length), binomial(n, t)), cap);
  std::vector<NextRow> next;
  build_next(x.symbols(), next);
  std::vector<Word> out;
  std::vector<Symbol> prefix;
  prefix.reserve(length);
  emit_subsequences(next, n, x.q(), 0, length, prefix, out);
  return WordSet::from_sorted_unchecked(x.q(), length, std::move(out));
}

WordSet enumerate_ball_reference(const Word& x, int t, std::uint64_t cap) {
  const int n = x.size();
  if (t < 0 || t > n) return WordSet(x.q(), std::max(n - t, 0));
  std::set<Word> level{x};
  for (int step = 0; step < t; ++step) {
    std::set<Word> next;
    for (const Word& w : level) {
      for (int i = 0; i < w.size(); ++i) {
        next.insert(w.without(i));
        if (next.size() > cap) check_cap(next.size(), cap);
      }
    }
    level = std::move(next);
  }
  return WordSet::from_sorted_unchecked(
      x.q(), n - t, std::vector<Word>(level.begin(), level.end()));
}

std::uint64_t ball_size(const Word& x, int t) {
  const int n = x.size();
  if (t < 0 || t > n) return 0;
  const int length = n - t;
  // dp[i][l]: distinct length-l subsequences of the prefix x[0, i). Appending
  // x[i-1] double counts exactly the subsequences already ending at its
  // previous occurrence.
  const int width = length + 1;
  std::vector<std::uint64_t> dp((n + 1) * width, 0);
  dp[0] = 1;
  std::array<int, kMaxAlphabet> last;
  last.fill(0);
  for (int i = 1; i <= n; ++i) {
    const int prev = last[x[i - 1]];
    std::uint64_t* row = &dp[i * width];
    const std::uint64_t* above = &dp[(i - 1) * width];
    row[0] = 1;
    for (int l = 1; l <= length; ++l) {
      std::uint64_t v = above[l] + above[l - 1];
      if (prev > 0) v -= dp[(prev - 1) * width + l - 1];
      row[l] = v;
    }
    last[x[i - 1]] = i;
  }
  return dp[n * width + length];
}

WordSet intersect_balls(const Word& x, int tx, const Word& y, int ty,
                        std::uint64_t cap) {
  check_same_alphabet(x, y);
  const int nx = x.size();
  const int ny = y.size();
  const int length = nx - tx;
  if (tx < 0 || tx > nx || ty < 0 || ty > ny || length != ny - ty) {
    return WordSet(x.q(), std::max(length, 0));
  }
  const int q = x.q();
  check_cap(std::min({saturating_pow(q, length), binomial(nx, tx),
                      binomial(ny, ty)}),
            cap);

  std::vector<NextRow> next_x;
  std::vector<NextRow> next_y;
  build_next(x.symbols(), next_x);
  build_next(y.symbols(), next_y);

  // counts[l][i][j]: distinct common length-l subsequences of x[i..], y[j..];
  // used to prune branches that cannot complete.
  const int w = ny + 1;
  const int layer = (nx + 1) * w;
  std::vector<std::uint64_t> counts((length + 1) * layer, 0);
  std::fill(counts.begin(), counts.begin() + layer, 1);
  for (int l = 1; l <= length; ++l) {
    for (int i = 0; i <= nx - l; ++i) {
      for (int j = 0; j <= ny - l; ++j) {
        std::uint64_t sum = 0;
        for (int a = 0; a < q; ++a) {
          const int p = next_x[i][a];
          const int r = next_y[j][a];
          if (p < nx && r < ny) sum += counts[(l - 1) * layer + (p + 1) * w + r + 1];
        }
        counts[l * layer + i * w + j] = sum;
      }
    }
  }

  std::vector<Word> out;
  std::vector<Symbol> prefix;
  auto walk = [&](auto&& self, int i, int j, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(Word::from_symbols_unchecked(q, prefix));
      return;
    }
    for (int a = 0; a < q; ++a) {
      const int p = next_x[i][a];
      const int r = next_y[j][a];
      if (p >= nx || r >= ny) continue;
      if (counts[(remaining - 1) * layer + (p + 1) * w + r + 1] == 0) continue;
      prefix.push_back(static_cast<Symbol>(a));
      self(self, p + 1, r + 1, remaining - 1);
      prefix.pop_back();
    }
  };
  if (counts[length * layer] > 0) walk(walk, 0, 0, length);
  return WordSet::from_sorted_unchecked(q, length, std::move(out));
}

std::uint64_t intersection_size(const Word& x, int tx, const Word& y, int ty) {
  check_same_alphabet(x, y);
  const int length = x.size() - tx;
  if (tx < 0 || tx > x.size() || ty < 0 || ty > y.size() ||
      length != y.size() - ty) {
    return 0;
  }
  PairCounter counter;
  counter.set_first(x.symbols(), x.q());
  return counter.count(y.symbols(), length);
}

int lcs_length(const Word& x, const Word& y) {
  check_same_alphabet(x, y);
  PairCounter counter;
  counter.set_first(x.symbols(), x.q());
  return counter.lcs(y.symbols());
}

int deletion_distance(const Word& x, const Word& y) {
  return std::min(x.size(), y.size()) - lcs_length(x, y);
}

bool is_subsequence(const Word& sub, const Word& w) {
  int i = 0;
  for (int j = 0; j < w.size() && i < sub.size(); ++j) {
    if (w[j] == sub[i]) ++i;
  }
  return i == sub.size();
}

void PairCounter::set_first(std::span<const Symbol> x, int q) {
  q_ = q;
  nx_ = static_cast<int>(x.size());
  std::copy(x.begin(), x.end(), x_.begin());
  build_next(x, next_x_);
}

std::uint64_t PairCounter::count(std::span<const Symbol> y, int length) {
  const int ny = static_cast<int>(y.size());
  if (length < 0 || length > nx_ || length > ny) return 0;
  if (length == 0) return 1;
  build_next(y, next_y_);
  const int w = ny + 1;
  const std::size_t cells = static_cast<std::size_t>(nx_ + 1) * w;
  prev_.assign(cells, 1);
  cur_.resize(cells);
  for (int l = 1; l <= length; ++l) {
    std::fill(cur_.begin(), cur_.end(), 0);
    for (int i = 0; i <= nx_ - l; ++i) {
      const NextRow& nxi = next_x_[i];
      for (int j = 0; j <= ny - l; ++j) {
        const NextRow& nyj = next_y_[j];
        std::uint64_t sum = 0;
        for (int a = 0; a < q_; ++a) {
          const int p = nxi[a];
          const int r = nyj[a];
          if (p < nx_ && r < ny) sum += prev_[(p + 1) * w + r + 1];
        }
        cur_[i * w + j] = sum;
      }
    }
    prev_.swap(cur_);
  }
  return prev_[0];
}

int PairCounter::lcs(std::span<const Symbol> y) {
  const int ny = static_cast<int>(y.size());
  lcs_row_.assign(ny + 1, 0);
  for (int i = 0; i < nx_; ++i) {
    int diag = 0;
    for (int j = 1; j <= ny; ++j) {
      const int up = lcs_row_[j];
      lcs_row_[j] = (x_[i] == y[j - 1]) ? diag + 1
                                        : std::max(up, lcs_row_[j - 1]);
      diag = up;
    }
  }
  return lcs_row_[ny];
}

}  // namespace seqrecon
