#include "seqrecon/closed_forms.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <string>

#include "seqrecon/error.hpp"
#include "seqrecon/word.hpp"

namespace seqrecon {

namespace {

constexpr int kTableSize = kMaxFormulaLength + 1;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "closed-form evaluation overflowed");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "closed-form evaluation overflowed");
  }
  return r;
}

struct Term {
  std::int64_t coef;
  int dn;
  int dt;
};

// sum coef * D_3(n - dn, t - dt)
std::int64_t d3_combination(int n, int t, std::initializer_list<Term> terms) {
  std::int64_t v = 0;
  for (const Term& term : terms) {
    v = checked_add(v, checked_mul(term.coef, d3(n - term.dn, t - term.dt)));
  }
  return v;
}

using Table = std::array<std::array<std::array<std::int64_t, kTableSize>,
                                    kTableSize>,
                         kMaxAlphabet + 1>;

// Fully populated on first use; function-local static initialization makes
// later concurrent reads race-free.
const Table& memo() {
  static const Table table = [] {
    Table tab{};
    for (int n = 0; n < kTableSize; ++n) {
      for (int t = 0; t <= n; ++t) tab[1][n][t] = 1;
    }
    for (int q = 2; q <= kMaxAlphabet; ++q) {
      for (int n = 0; n < kTableSize; ++n) {
        for (int t = 0; t <= n; ++t) {
          // sum_i C(n-t, i) * D_{q-1}(t, t-i)
          std::int64_t v = 0;
          for (int i = 0; i <= t; ++i) {
            v = checked_add(
                v, checked_mul(binomial(n - t, i), tab[q - 1][t][t - i]));
          }
          tab[q][n][t] = v;
        }
      }
    }
    return tab;
  }();
  return table;
}

void require_length(int n) {
  if (n > kMaxFormulaLength) {
    throw Error(ErrorCode::kDomain, "n = " + std::to_string(n) +
                                        " exceeds the evaluator limit 64");
  }
}

[[noreturn]] void domain_error(std::string_view what, int n, int t) {
  throw Error(ErrorCode::kDomain, std::string(what) + " undefined at n = " +
                                      std::to_string(n) + ", t = " +
                                      std::to_string(t));
}

FormulaValue make(FormulaId id, int q, int n, int t, std::int64_t v,
                  int d = 0) {
  return FormulaValue{id, FormulaPoint{q, n, t, d}, v};
}

}  // namespace

std::int64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  if (c > static_cast<unsigned __int128>(INT64_MAX)) {
    throw Error(ErrorCode::kOverflow, "binomial coefficient overflowed");
  }
  return static_cast<std::int64_t>(c);
}

std::int64_t pow3(int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, 3);
  return r;
}

std::string_view to_string(FormulaId id) {
  switch (id) {
    case FormulaId::kDq: return "dq";
    case FormulaId::kNSingle: return "n_single";
    case FormulaId::kN2Double: return "n2_double";
    case FormulaId::kN2dd: return "n2_dd";
    case FormulaId::kM0: return "m0";
    case FormulaId::kM1: return "m1";
    case FormulaId::kF: return "f";
    case FormulaId::kN3Double: return "n3_double";
    case FormulaId::kN3Cross: return "n3_cross";
    case FormulaId::kNAux: return "n_aux";
  }
  return "?";
}

std::optional<FormulaId> formula_from_string(std::string_view name) {
  if (name == "ball_max") return FormulaId::kDq;
  if (name == "f_gap") return FormulaId::kF;
  for (FormulaId id :
       {FormulaId::kDq, FormulaId::kNSingle, FormulaId::kN2Double,
        FormulaId::kN2dd, FormulaId::kM0, FormulaId::kM1, FormulaId::kF,
        FormulaId::kN3Double, FormulaId::kN3Cross, FormulaId::kNAux}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

std::int64_t dq(int q, int n, int t) {
  if (q < 1 || q > kMaxAlphabet) {
    throw Error(ErrorCode::kDomain,
                "alphabet size " + std::to_string(q) + " outside 1..6");
  }
  if (n < 0 || t < 0 || t > n) return 0;
  require_length(n);
  return memo()[q][n][t];
}

FormulaValue ball_max(int q, int n, int t) {
  return make(FormulaId::kDq, q, n, t, dq(q, n, t));
}

FormulaValue n_single(int q, int n, int t) {
  validate_alphabet(q);
  if (t < 0 || n < t + 1) domain_error("N_q(n,1,t)", n, t);
  require_length(n);
  std::int64_t v = dq(q, n - 2, t - 1);
  for (int i = 1; i <= q - 1; ++i) v = checked_add(v, dq(q, n - i - 1, t - i));
  return make(FormulaId::kNSingle, q, n, t, v, 1);
}

FormulaValue n2_double(int n, int t) {
  if (t < 2 || n < std::max(8, 2 * t + 1)) domain_error("N_2(n,2,t)", n, t);
  require_length(n);
  auto d2 = [](int m, int s) { return dq(2, m, s); };
  const std::int64_t v = 2 * d2(n - 4, t - 2) + 2 * d2(n - 5, t - 2) +
                         2 * d2(n - 7, t - 2) + d2(n - 6, t - 3) +
                         d2(n - 7, t - 3);
  return make(FormulaId::kN2Double, 2, n, t, v, 2);
}

FormulaValue n2_dd(int d, int n) {
  if (d < 1 || n < 4 * d - 2) domain_error("N_2(n,d,d)", n, d);
  return make(FormulaId::kN2dd, 2, n, d, binomial(2 * d, d), d);
}

FormulaValue m0(int n, int t) {
  require_length(n);
  const std::int64_t v = d3_combination(
      n, t, {{1, 4, 2}, {3, 5, 2}, {4, 5, 3}, {3, 6, 3}, {1, 6, 4},
             {2, 7, 3}, {2, 7, 4}, {1, 8, 4}, {1, 12, 7}, {-1, 10, 5}});
  return make(FormulaId::kM0, 3, n, t, v, 2);
}

FormulaValue m1(int n, int t) {
  require_length(n);
  const std::int64_t v = d3_combination(
      n, t, {{1, 4, 2}, {5, 5, 2}, {4, 5, 3}, {3, 6, 3}, {1, 6, 4},
             {1, 8, 5}});
  return make(FormulaId::kM1, 3, n, t, v, 2);
}

FormulaValue f_gap(int n, int t) {
  return make(FormulaId::kF, 3, n, t, m1(n, t).value - m0(n, t).value, 2);
}

std::int64_t f_gap_expanded(int n, int t) {
  require_length(n);
  return d3_combination(n, t,
                        {{1, 5, 2}, {1, 6, 2}, {1, 8, 5}, {1, 10, 5},
                         {-1, 7, 3}, {-2, 7, 4}, {-1, 12, 7}});
}

std::string_view to_string(N3Branch b) {
  switch (b) {
    case N3Branch::kSpecial: return "special";
    case N3Branch::kThreePower: return "three_power";
    case N3Branch::kM1: return "m1";
    case N3Branch::kMaxM0M1: return "max_m0_m1";
  }
  return "?";
}

N3Branch n3_double_branch(int n, int t) {
  if (t >= 2 && n >= t) {
    if ((n == 4 && t == 2) || (n == 5 && t == 2) || (n == 5 && t == 3)) {
      return N3Branch::kSpecial;
    }
    if (2 * n <= 3 * t) return N3Branch::kThreePower;
    const int lower = 3 * t / 2 + 1;
    if (t <= 5 && n >= std::max(6, lower)) return N3Branch::kM1;
    if (t >= 6 && n >= lower && n <= 3 * t - 1) return N3Branch::kMaxM0M1;
    if (t >= 6 && n >= 3 * t) return N3Branch::kM1;
  }
  throw Error(ErrorCode::kOutsideTheoremRange,
              "N_3(n,2,t) has no closed form at n = " + std::to_string(n) +
                  ", t = " + std::to_string(t));
}

FormulaValue n3_double(int n, int t) {
  const N3Branch branch = n3_double_branch(n, t);
  require_length(n);
  std::int64_t v = 0;
  switch (branch) {
    case N3Branch::kSpecial:
      v = (n == 4) ? 4 : (t == 2 ? 6 : 8);
      break;
    case N3Branch::kThreePower:
      v = pow3(n - t);
      break;
    case N3Branch::kM1:
      v = m1(n, t).value;
      break;
    case N3Branch::kMaxM0M1:
      v = std::max(m0(n, t).value, m1(n, t).value);
      break;
  }
  return make(FormulaId::kN3Double, 3, n, t, v, 2);
}

FormulaValue n_aux(int n, int t) {
  require_length(n);
  const std::int64_t v =
      d3_combination(n, t, {{1, 2, 1}, {2, 3, 1}, {1, 3, 2}, {1, 4, 2}});
  return make(FormulaId::kNAux, 3, n, t, v, 1);
}

FormulaValue n3_cross(int n, int t) {
  if (t < 1 || n < std::max(4, t)) domain_error("N_3(n,t+1,t,1)", n, t);
  require_length(n);
  const std::int64_t v = (2 * n > 3 * t) ? n_aux(n, t).value : pow3(n - t);
  return make(FormulaId::kN3Cross, 3, n, t, v, 1);
}

FormulaValue evaluate(FormulaId id, const FormulaPoint& p) {
  switch (id) {
    case FormulaId::kDq: return ball_max(p.q, p.n, p.t);
    case FormulaId::kNSingle: return n_single(p.q, p.n, p.t);
    case FormulaId::kN2Double: return n2_double(p.n, p.t);
    case FormulaId::kN2dd: return n2_dd(p.d > 0 ? p.d : p.t, p.n);
    case FormulaId::kM0: return m0(p.n, p.t);
    case FormulaId::kM1: return m1(p.n, p.t);
    case FormulaId::kF: return f_gap(p.n, p.t);
    case FormulaId::kN3Double: return n3_double(p.n, p.t);
    case FormulaId::kN3Cross: return n3_cross(p.n, p.t);
    case FormulaId::kNAux: return n_aux(p.n, p.t);
  }
  throw Error(ErrorCode::kDomain, "unknown formula");
}

std::vector<FormulaValue> formula_table(FormulaId id, IntRange n_range,
                                        IntRange t_range, int q, int d) {
  std::vector<FormulaValue> rows;
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    for (int t = t_range.lo; t <= t_range.hi; ++t) {
      try {
        rows.push_back(evaluate(id, FormulaPoint{q, n, t, d}));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kDomain &&
            e.code() != ErrorCode::kOutsideTheoremRange) {
          throw;
        }
      }
    }
  }
  return rows;
}

}  // namespace seqrecon
