#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace seqrecon {

// Largest n accepted by the evaluators (bounds the memo table).
inline constexpr int kMaxFormulaLength = 64;

enum class FormulaId {
  kDq,         // maximum deletion-ball size D_q(n,t)
  kNSingle,    // N_q(n,1,t)
  kN2Double,   // N_2(n,2,t)
  kN2dd,       // N_2(n,d,d)
  kM0,
  kM1,
  kF,          // M_1 - M_0
  kN3Double,   // N_3(n,2,t)
  kN3Cross,    // N_3(n,t+1,t,1)
  kNAux,       // four-term D_3 combination standing in for N_3(n,t+1,t,1)
};

std::string_view to_string(FormulaId id);
// Accepts the canonical ids plus the aliases "ball_max" and "f_gap".
std::optional<FormulaId> formula_from_string(std::string_view name);

struct FormulaPoint {
  int q = 3;
  int n = 0;
  int t = 0;
  int d = 0;

  friend bool operator==(const FormulaPoint&, const FormulaPoint&) = default;
};

struct FormulaValue {
  FormulaId id;
  FormulaPoint point;
  std::int64_t value;
};

// Raw D_q(n,t) lookup with the boundary conventions: 0 when n < 0, t < 0 or
// t > n; 1 when t == n >= 0; D_1(n,t) = 1 on 0 <= t <= n. Valid for
// 1 <= q <= 6 and n <= 64. Thread-safe.
std::int64_t dq(int q, int n, int t);
inline std::int64_t d3(int n, int t) { return dq(3, n, t); }

FormulaValue ball_max(int q, int n, int t);
FormulaValue n_single(int q, int n, int t);
FormulaValue n2_double(int n, int t);
FormulaValue n2_dd(int d, int n);
FormulaValue m0(int n, int t);
FormulaValue m1(int n, int t);
FormulaValue f_gap(int n, int t);
// The seven-term expansion of M_1 - M_0; agrees with f_gap for t >= 2 and
// n >= max(9, floor(3t/2) + 1).
std::int64_t f_gap_expanded(int n, int t);

enum class N3Branch { kSpecial, kThreePower, kM1, kMaxM0M1 };
std::string_view to_string(N3Branch b);

// Which piece of the N_3(n,2,t) formula covers (n,t); throws
// kOutsideTheoremRange for points no piece covers.
N3Branch n3_double_branch(int n, int t);
FormulaValue n3_double(int n, int t);
FormulaValue n3_cross(int n, int t);
FormulaValue n_aux(int n, int t);

FormulaValue evaluate(FormulaId id, const FormulaPoint& point);

struct IntRange {
  int lo;
  int hi;  // inclusive
};

// Evaluates `id` over the (n,t) rectangle, skipping points outside the
// formula's domain.
std::vector<FormulaValue> formula_table(FormulaId id, IntRange n_range,
                                        IntRange t_range, int q = 3,
                                        int d = 0);

std::int64_t binomial(int n, int k);
std::int64_t pow3(int e);

}  // namespace seqrecon
