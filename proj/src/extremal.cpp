#include "seqrecon/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "seqrecon/closed_forms.hpp"
#include "seqrecon/error.hpp"

namespace seqrecon {

namespace {

Word a(int n) { return identity_periodic(3, n); }

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kDomain, what);
}

}  // namespace

std::string_view to_string(ClaimedFormula f) {
  switch (f) {
    case ClaimedFormula::kM0: return "M0";
    case ClaimedFormula::kM1: return "M1";
    case ClaimedFormula::kNSingle: return "N_single";
    case ClaimedFormula::kNAux: return "N_aux";
    case ClaimedFormula::kThreePower: return "ThreePower";
    case ClaimedFormula::kUnknown: return "conjecture-unknown";
  }
  return "?";
}

ExtremalPair pair_m1(int n) {
  require(n >= 6, "pair_m1 needs n >= 6");
  const Word tail = a(n - 6);
  return ExtremalPair{Word(3, {0, 1, 2, 0, 1, 2}).concat(tail),
                      Word(3, {1, 0, 2, 1, 0, 2}).concat(tail), 2, 0,
                      ClaimedFormula::kM1};
}

ExtremalPair pair_m0(int n) {
  require(n >= 6, "pair_m0 needs n >= 6");
  const Word a3 = a(n - 3);
  const int b = a3[n - 5];
  const int c = a3[n - 4];
  const Word x0 = Word(3, {0, 1, 2}).concat(a(n - 5)).concat(Word(3, {c, b}));
  const Word y0 = Word(3, {1, 0, 2}).concat(a3);
  if (n >= 9) {
    // Second rendering: x0 = (0,1,2,0,1,2) a_{n-9} (a,c,b) with (a,b,c) the
    // last three symbols of a_{n-3}.
    const int last_a = a3[n - 6];
    const Word alt = Word(3, {0, 1, 2, 0, 1, 2})
                         .concat(a(n - 9))
                         .concat(Word(3, {last_a, c, b}));
    if (alt != x0) throw std::logic_error("pair_m0 renderings disagree");
  }
  return ExtremalPair{x0, y0, 2, 0, ClaimedFormula::kM0};
}

ExtremalPair pair_thm1(int q, int n) {
  validate_alphabet(q);
  require(n >= 2, "pair_thm1 needs n >= 2");
  const Word x = identity_periodic(q, n);
  std::vector<Symbol> s(x.symbols().begin(), x.symbols().end());
  std::swap(s[0], s[1]);
  return ExtremalPair{x, Word::from_symbols_unchecked(q, s), 1, 0,
                      ClaimedFormula::kNSingle};
}

ExtremalPair pair_conjecture(int q, int n) {
  validate_alphabet(q);
  require(q >= 4, "conjecture pairs need q >= 4");
  require(n >= 5, "conjecture pairs need n >= 5");
  std::vector<int> w(n - 5);
  for (int i = 1; i <= n - 5; ++i) w[i - 1] = (i + 1) % q;
  const Word tail(q, w);
  return ExtremalPair{Word(q, {0, 1, 2, 0, 1}).concat(tail),
                      Word(q, {1, 0, 2, 1, 0}).concat(tail), 2, 0,
                      ClaimedFormula::kUnknown};
}

std::optional<std::int64_t> claimed_intersection(const ExtremalPair& pair,
                                                 int t) {
  const int n = pair.y.size();
  switch (pair.formula) {
    case ClaimedFormula::kM0:
    case ClaimedFormula::kM1: {
      if (t < 2 || n < std::max(9, 3 * t / 2 + 1)) return std::nullopt;
      return pair.formula == ClaimedFormula::kM0 ? m0(n, t).value
                                                 : m1(n, t).value;
    }
    case ClaimedFormula::kNSingle:
      if (t < 0 || n < t + 1) return std::nullopt;
      return n_single(pair.x.q(), n, t).value;
    case ClaimedFormula::kNAux:
    case ClaimedFormula::kThreePower:
    case ClaimedFormula::kUnknown:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace seqrecon
