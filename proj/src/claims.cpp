#include "seqrecon/claims.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "seqrecon/deletion_balls.hpp"
#include "seqrecon/error.hpp"
#include "seqrecon/extremal.hpp"
#include "seqrecon/reconstruct.hpp"
#include "seqrecon/word.hpp"

namespace seqrecon {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::kEqual: return "==";
    case Relation::kAtMost: return "<=";
    case Relation::kAtLeast: return ">=";
  }
  return "?";
}

namespace {

int half_floor_plus_one(int t) { return 3 * t / 2 + 1; }

// n >= max(9, floor(3t/2) + 1), t >= 2: the range of the M_0/M_1 bounds.
bool upper_range(int n, int t) {
  return t >= 2 && n >= std::max(9, half_floor_plus_one(t)) &&
         n <= kMaxFormulaLength;
}

bool holds(Relation r, std::int64_t expected, std::int64_t observed) {
  switch (r) {
    case Relation::kEqual: return observed == expected;
    case Relation::kAtMost: return observed <= expected;
    case Relation::kAtLeast: return observed >= expected;
  }
  return false;
}

VerificationRecord record(std::string_view id, const ClaimParams& p,
                          Relation r, std::int64_t expected,
                          std::int64_t observed, std::string detail = {}) {
  return VerificationRecord{std::string(id), p,        r,
                            expected,        observed, holds(r, expected, observed),
                            std::move(detail)};
}

// One inequality lhs <= rhs among several checked together.
struct Inequality {
  std::string label;
  std::int64_t lhs;
  std::int64_t rhs;
};

// Reports the inequality with the least slack (the first failing one if any).
VerificationRecord tightest(std::string_view id, const ClaimParams& p,
                            const std::vector<Inequality>& parts) {
  const auto it = std::min_element(
      parts.begin(), parts.end(),
      [](const Inequality& a, const Inequality& b) {
        return a.rhs - a.lhs < b.rhs - b.lhs;
      });
  std::ostringstream detail;
  detail << it->label << " (" << parts.size() << " inequalities, tightest shown)";
  return record(id, p, Relation::kAtMost, it->rhs, it->lhs, detail.str());
}

std::uint64_t search_max(const ClaimOptions& opts, int q, int n, int k, int t,
                         int d) {
  SearchSpec spec;
  spec.q = q;
  spec.n = n;
  spec.k = k;
  spec.t = t;
  spec.d = d;
  spec.witness_cap = 0;
  spec.workers = opts.workers;
  spec.budget = opts.budget;
  return max_intersection(spec).maximum;
}

std::int64_t m_i(int i, int n, int t) {
  return i == 0 ? m0(n, t).value : m1(n, t).value;
}

std::int64_t aux(int n, int t) { return n_aux(n, t).value; }

struct Claim {
  std::function<bool(const ClaimParams&)> applies;
  std::function<VerificationRecord(std::string_view, const ClaimParams&,
                                   const ClaimOptions&)>
      verify;
};

VerificationRecord verify_theorem1(std::string_view id, const ClaimParams& p,
                                   const ClaimOptions& o) {
  const std::int64_t expected = n_single(p.q, p.n, p.t).value;
  const auto observed =
      static_cast<std::int64_t>(search_max(o, p.q, p.n, 0, p.t, 1));
  const ExtremalPair pair = pair_thm1(p.q, p.n);
  const auto attained =
      static_cast<std::int64_t>(intersection_size(pair.x, p.t, pair.y, p.t));
  VerificationRecord r = record(id, p, Relation::kEqual, expected, observed,
                                "pair " + pair.x.str() + "/" + pair.y.str() +
                                    " attains " + std::to_string(attained));
  r.pass = r.pass && attained == expected;
  return r;
}

VerificationRecord verify_theorem5(int which, std::string_view id,
                                   const ClaimParams& p) {
  const ExtremalPair pair = which == 0 ? pair_m0(p.n) : pair_m1(p.n);
  const std::int64_t expected = m_i(which, p.n, p.t);
  const auto observed =
      static_cast<std::int64_t>(intersection_size(pair.x, p.t, pair.y, p.t));
  const int dist = deletion_distance(pair.x, pair.y);
  VerificationRecord r =
      record(id, p, Relation::kEqual, expected, observed,
             pair.x.str() + "/" + pair.y.str() + " at distance " +
                 std::to_string(dist));
  r.pass = r.pass && dist == pair.claimed_distance;
  return r;
}

VerificationRecord verify_lemma11(std::string_view id, const ClaimParams& p,
                                  const ClaimOptions& o) {
  const int n = p.n;
  const int t = p.t;
  const std::uint64_t count = word_count(3, n);
  const double estimate = static_cast<double>(count) * (n + 1) * (n + 1);
  if (estimate > o.budget) {
    std::ostringstream msg;
    msg << "lemma11 at n=" << n << " needs ~" << estimate
        << " operations, budget is " << o.budget;
    throw BudgetExceeded(estimate, o.budget, msg.str());
  }
  const std::int64_t bound = d3(n - 2, t) + d3(n - 2, t - 1) +
                             d3(n - 3, t - 1) + d3(n - 3, t - 2) +
                             d3(n - 5, t - 3);
  std::int64_t best = 0;
  std::uint64_t attaining = 0;
  Word argmax;
  for (std::uint64_t r = 0; r < count; ++r) {
    const Word x = unrank(3, n, r);
    if (is_periodic(x)) continue;
    const auto size = static_cast<std::int64_t>(ball_size(x, t));
    if (size > best) {
      best = size;
      argmax = x;
      attaining = 0;
    }
    if (size == best) ++attaining;
  }
  std::ostringstream detail;
  detail << "max non-periodic ball " << best << " at " << argmax.str() << " ("
         << attaining << " words); bound "
         << (best == bound ? "attained" : "not attained");
  return record(id, p, Relation::kAtMost, bound, best, detail.str());
}

VerificationRecord verify_lemma15(std::string_view id, const ClaimParams& p) {
  const std::int64_t f = f_gap(p.n, p.t).value;
  if (p.n >= 3 * p.t) {
    return record(id, p, Relation::kAtLeast, 1, f, "f > 0 for n >= 3t");
  }
  const bool minus_one = p.n % 3 == 1 && p.t == 2 * (p.n / 3);
  return record(id, p, Relation::kEqual, minus_one ? -1 : 0, f,
                minus_one ? "f(3k+1,2k)" : "f(3k+2,2k+1)");
}

bool lemma15_point(const ClaimParams& p) {
  if (p.t < 6 || !upper_range(p.n, p.t)) return false;
  if (p.n >= 3 * p.t) return true;
  const int k = p.n / 3;
  if (k < 3) return false;
  return (p.n == 3 * k + 1 && p.t == 2 * k) ||
         (p.n == 3 * k + 2 && p.t == 2 * k + 1);
}

bool lemma16_index(const ClaimParams& p, int i) {
  return 2 * (p.n - i) <= 3 * (p.t - i + 1);
}

VerificationRecord verify_lemma16(std::string_view id, const ClaimParams& p) {
  std::vector<VerificationRecord> parts;
  for (int i = 1; i <= 2; ++i) {
    if (!lemma16_index(p, i)) continue;
    parts.push_back(record(id, p, Relation::kEqual, pow3(p.n - p.t - 1),
                           m1(p.n - i, p.t - i + 1).value,
                           "M1(n-" + std::to_string(i) + ",t-" +
                               std::to_string(i - 1) + ") = 3^(n-t-1)"));
  }
  for (const auto& r : parts) {
    if (!r.pass) return r;
  }
  return parts.back();
}

VerificationRecord verify_lemma17(std::string_view id, const ClaimParams& p) {
  const int n = p.n;
  const int t = p.t;
  std::vector<Inequality> parts;
  const std::int64_t base = d3(n - 2, t - 2);
  parts.push_back({"D3(n-2,t-2) <= M0(n,t)", base, m0(n, t).value});
  parts.push_back({"D3(n-2,t-2) <= M1(n,t)", base, m1(n, t).value});
  if (upper_range(n, t)) {
    for (int i = 0; i <= 1; ++i) {
      parts.push_back({"M" + std::to_string(i) + "(n-1,t) + 2 N(n-3,t-2) <= M1(n,t)",
                       m_i(i, n - 1, t) + 2 * aux(n - 3, t - 2), m1(n, t).value});
    }
  }
  return tightest(id, p, parts);
}

VerificationRecord verify_lemma18(std::string_view id, const ClaimParams& p) {
  const int n = p.n;
  const int t = p.t;
  const std::int64_t rhs = m1(n - 3, t - 2).value + m1(n - 2, t - 1).value;
  std::vector<Inequality> parts = {
      {"D3(n-4,t-3) <= N(n-3,t-2)", d3(n - 4, t - 3), aux(n - 3, t - 2)},
      {"N(n-4,t-3) <= M1(n-3,t-2)", aux(n - 4, t - 3), m1(n - 3, t - 2).value},
      {"M0(n-2,t-1) + N(n-4,t-3) <= M1(n-3,t-2) + M1(n-2,t-1)",
       m0(n - 2, t - 1).value + aux(n - 4, t - 3), rhs},
  };
  for (int i = 0; i <= 1; ++i) {
    parts.push_back({"M" + std::to_string(i) +
                         "(n-3,t-1) + 2 N(n-5,t-3) + M0(n-3,t-2) <= "
                         "M1(n-3,t-2) + M1(n-2,t-1)",
                     m_i(i, n - 3, t - 1) + 2 * aux(n - 5, t - 3) +
                         m0(n - 3, t - 2).value,
                     rhs});
  }
  return tightest(id, p, parts);
}

VerificationRecord verify_eq8(int which, std::string_view id,
                              const ClaimParams& p) {
  const int n = p.n;
  const int t = p.t;
  const std::int64_t rhs =
      m_i(which, n - 1, t) + m_i(which, n - 2, t - 1) + m_i(which, n - 3, t - 2);
  return record(id, p, Relation::kEqual, rhs, m_i(which, n, t),
                "M(n,t) vs M(n-1,t) + M(n-2,t-1) + M(n-3,t-2)");
}

VerificationRecord verify_reconstruction(std::string_view id,
                                         const ClaimParams& p,
                                         const ClaimOptions& o) {
  const SharpnessReport s =
      exhaustive_sharpness(p.q, p.n, p.t, p.d, {o.workers, o.budget});
  std::ostringstream detail;
  detail << "threshold " << s.threshold << ", " << s.subsets_checked
         << " subsets over " << s.codewords_checked << " of " << s.code_size
         << " codewords, max pair intersection " << s.max_pair_intersection;
  VerificationRecord r = record(id, p, Relation::kEqual, 0,
                                static_cast<std::int64_t>(s.failures), detail.str());
  r.pass = r.pass && static_cast<std::int64_t>(s.max_pair_intersection) < s.threshold;
  return r;
}

bool in_table(int n, int t) { return n >= 0 && t >= 0 && n <= kMaxFormulaLength; }

const std::map<std::string, Claim, std::less<>>& registry() {
  static const std::map<std::string, Claim, std::less<>> claims = [] {
    std::map<std::string, Claim, std::less<>> m;
    m["theorem1"] = {
        [](const ClaimParams& p) {
          return p.q >= kMinAlphabet && p.q <= kMaxAlphabet && p.t >= 1 &&
                 p.n >= p.t + 1 && p.n <= kMaxWordLength;
        },
        verify_theorem1};
    m["theorem2"] = {
        [](const ClaimParams& p) {
          return p.t >= 2 && p.n >= std::max(8, 2 * p.t + 1) &&
                 p.n <= kMaxWordLength;
        },
        [](std::string_view id, const ClaimParams& p, const ClaimOptions& o) {
          ClaimParams fixed = p;
          fixed.q = 2;
          fixed.d = 2;
          return record(id, fixed, Relation::kEqual, n2_double(p.n, p.t).value,
                        static_cast<std::int64_t>(search_max(o, 2, p.n, 0, p.t, 2)));
        }};
    m["theorem3"] = {
        [](const ClaimParams& p) {
          return p.t >= 1 && p.n >= 4 * p.t - 2 && p.n <= kMaxWordLength;
        },
        [](std::string_view id, const ClaimParams& p, const ClaimOptions& o) {
          ClaimParams fixed = p;
          fixed.q = 2;
          fixed.d = p.t;
          return record(id, fixed, Relation::kEqual, n2_dd(p.t, p.n).value,
                        static_cast<std::int64_t>(search_max(o, 2, p.n, 0, p.t, p.t)));
        }};
    m["theorem4"] = {
        [](const ClaimParams& p) {
          return p.t >= 2 && p.n >= p.t && p.n <= kMaxFormulaLength;
        },
        [](std::string_view id, const ClaimParams& p, const ClaimOptions& o) {
          ClaimParams fixed = p;
          fixed.q = 3;
          fixed.d = 2;
          return record(id, fixed, Relation::kEqual, n3_double(p.n, p.t).value,
                        static_cast<std::int64_t>(search_max(o, 3, p.n, 0, p.t, 2)),
                        "branch " + std::string(to_string(n3_double_branch(p.n, p.t))));
        }};
    m["theorem5_m1"] = {[](const ClaimParams& p) { return upper_range(p.n, p.t); },
                        [](std::string_view id, const ClaimParams& p,
                           const ClaimOptions&) { return verify_theorem5(1, id, p); }};
    m["theorem5_m0"] = {[](const ClaimParams& p) { return upper_range(p.n, p.t); },
                        [](std::string_view id, const ClaimParams& p,
                           const ClaimOptions&) { return verify_theorem5(0, id, p); }};
    m["lemma6"] = {
        [](const ClaimParams& p) { return p.n >= 4 && p.n <= kMaxWordLength - 1; },
        [](std::string_view id, const ClaimParams& p, const ClaimOptions& o) {
          ClaimParams fixed{3, p.n, 1, 1};
          return record(id, fixed, Relation::kAtMost, 3,
                        static_cast<std::int64_t>(search_max(o, 3, p.n, 1, 1, 1)));
        }};
    m["lemma7"] = {
        [](const ClaimParams& p) {
          return p.t >= 1 && p.n >= std::max(4, p.t) && p.n <= kMaxWordLength - 1;
        },
        [](std::string_view id, const ClaimParams& p, const ClaimOptions& o) {
          ClaimParams fixed{3, p.n, p.t, 1};
          return record(id, fixed, Relation::kEqual, n3_cross(p.n, p.t).value,
                        static_cast<std::int64_t>(search_max(o, 3, p.n, 1, p.t, 1)));
        }};
    m["lemma11"] = {
        [](const ClaimParams& p) {
          return p.t >= 0 && p.n >= p.t + 2 && p.n <= 20;
        },
        verify_lemma11};
    m["lemma15"] = {lemma15_point,
                    [](std::string_view id, const ClaimParams& p,
                       const ClaimOptions&) { return verify_lemma15(id, p); }};
    m["eq3"] = {
        [](const ClaimParams& p) { return in_table(p.n, p.t) && p.n >= p.t + 1; },
        [](std::string_view id, const ClaimParams& p, const ClaimOptions&) {
          return record(id, p, Relation::kEqual,
                        d3(p.n - 1, p.t) + d3(p.n - 2, p.t - 1) + d3(p.n - 3, p.t - 2),
                        d3(p.n, p.t), "D3(n,t) vs D3(n-1,t) + D3(n-2,t-1) + D3(n-3,t-2)");
        }};
    m["eq4"] = {
        [](const ClaimParams& p) {
          return in_table(p.n, p.t) && p.n >= p.t && 3 * p.t >= 2 * p.n;
        },
        [](std::string_view id, const ClaimParams& p, const ClaimOptions&) {
          return record(id, p, Relation::kEqual, pow3(p.n - p.t), d3(p.n, p.t),
                        "D3(n,t) vs 3^(n-t)");
        }};
    m["eq9"] = {
        [](const ClaimParams& p) { return in_table(p.n, p.t) && p.n >= p.t + 1; },
        [](std::string_view id, const ClaimParams& p, const ClaimOptions&) {
          return record(id, p, Relation::kAtMost, 3 * d3(p.n - 1, p.t), d3(p.n, p.t),
                        "D3(n,t) vs 3 D3(n-1,t)");
        }};
    m["eq8_m0"] = {
        [](const ClaimParams& p) {
          return in_table(p.n, p.t) && p.t >= 2 && p.n >= p.t + 1;
        },
        [](std::string_view id, const ClaimParams& p, const ClaimOptions&) {
          return verify_eq8(0, id, p);
        }};
    m["eq8_m1"] = {
        [](const ClaimParams& p) {
          return in_table(p.n, p.t) && p.t >= 2 && p.n >= p.t + 1;
        },
        [](std::string_view id, const ClaimParams& p, const ClaimOptions&) {
          return verify_eq8(1, id, p);
        }};
    m["lemma16"] = {
        [](const ClaimParams& p) {
          return upper_range(p.n, p.t) &&
                 (lemma16_index(p, 1) || lemma16_index(p, 2));
        },
        [](std::string_view id, const ClaimParams& p, const ClaimOptions&) {
          return verify_lemma16(id, p);
        }};
    m["lemma17"] = {
        [](const ClaimParams& p) {
          return p.t >= 2 && p.n >= p.t + 4 && p.n <= kMaxFormulaLength;
        },
        [](std::string_view id, const ClaimParams& p, const ClaimOptions&) {
          return verify_lemma17(id, p);
        }};
    m["lemma18"] = {[](const ClaimParams& p) { return upper_range(p.n, p.t); },
                    [](std::string_view id, const ClaimParams& p,
                       const ClaimOptions&) { return verify_lemma18(id, p); }};
    m["reconstruction"] = {
        [](const ClaimParams& p) {
          return p.q >= kMinAlphabet && p.q <= kMaxAlphabet && p.d >= 1 &&
                 p.t >= 0 && p.n >= p.t + 1 && p.n <= kMaxWordLength;
        },
        verify_reconstruction};
    return m;
  }();
  return claims;
}

const Claim& lookup(std::string_view id) {
  const auto& reg = registry();
  const auto it = reg.find(id);
  if (it == reg.end()) {
    throw Error(ErrorCode::kUnknownClaim, "unknown claim '" + std::string(id) + "'");
  }
  return it->second;
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = {
      "theorem1", "theorem2", "theorem3",    "theorem4", "theorem5_m1",
      "theorem5_m0", "lemma6", "lemma7",     "lemma11",  "lemma15",
      "lemma16",  "lemma17",  "lemma18",     "eq3",      "eq4",
      "eq8_m0",   "eq8_m1",   "eq9",         "reconstruction"};
  return ids;
}

bool is_claim(std::string_view id) { return registry().contains(id); }

bool claim_applies(std::string_view id, const ClaimParams& p) {
  return lookup(id).applies(p);
}

VerificationRecord verify_claim(std::string_view id, const ClaimParams& p,
                                const ClaimOptions& opts) {
  const Claim& claim = lookup(id);
  if (!claim.applies(p)) {
    std::ostringstream msg;
    msg << id << " does not cover q=" << p.q << " n=" << p.n << " t=" << p.t
        << " d=" << p.d;
    throw Error(ErrorCode::kDomain, msg.str());
  }
  return claim.verify(id, p, opts);
}

std::vector<VerificationRecord> verify_sweep(std::string_view id, int q,
                                             IntRange n_range,
                                             IntRange t_range, int d,
                                             const ClaimOptions& opts) {
  const Claim& claim = lookup(id);
  std::vector<VerificationRecord> out;
  for (int n = n_range.lo; n <= n_range.hi; ++n) {
    for (int t = t_range.lo; t <= t_range.hi; ++t) {
      const ClaimParams p{q, n, t, d};
      if (claim.applies(p)) out.push_back(claim.verify(id, p, opts));
    }
  }
  return out;
}

const std::vector<SweepEntry>& desk_sweep() {
  static const std::vector<SweepEntry> entries = {
      {"theorem4", 3, {4, 8}, {2, 5}, 2},
      {"theorem5_m1", 3, {9, 20}, {2, 6}, 2},
      {"theorem5_m0", 3, {9, 20}, {2, 6}, 2},
      {"theorem1", 2, {2, 7}, {1, 6}, 1},
      {"theorem1", 3, {2, 7}, {1, 6}, 1},
      {"theorem2", 2, {8, 10}, {2, 2}, 2},
      {"theorem3", 2, {2, 10}, {1, 2}, 0},
      {"lemma6", 3, {4, 7}, {1, 1}, 1},
      {"lemma7", 3, {4, 7}, {1, 7}, 1},
      {"lemma11", 3, {4, 8}, {1, 6}, 0},
      {"lemma15", 3, {9, 50}, {6, 25}, 2},
      {"lemma16", 3, {9, 50}, {2, 33}, 2},
      {"lemma17", 3, {6, 50}, {2, 46}, 2},
      {"lemma18", 3, {9, 50}, {2, 33}, 2},
      {"eq3", 3, {1, 60}, {0, 30}, 0},
      {"eq4", 3, {0, 60}, {0, 30}, 0},
      {"eq9", 3, {1, 60}, {0, 30}, 0},
      {"eq8_m0", 3, {3, 60}, {2, 20}, 2},
      {"eq8_m1", 3, {3, 60}, {2, 20}, 2},
      {"reconstruction", 3, {6, 6}, {2, 2}, 2},
  };
  return entries;
}

}  // namespace seqrecon
