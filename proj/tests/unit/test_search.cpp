#include <gtest/gtest.h>

#include <set>

#include "seqrecon/closed_forms.hpp"
#include "seqrecon/deletion_balls.hpp"
#include "seqrecon/error.hpp"
#include "seqrecon/extremal.hpp"
#include "seqrecon/search.hpp"

namespace seqrecon {
namespace {

SearchSpec spec_of(int q, int n, int k, int t, int d) {
  SearchSpec s;
  s.q = q;
  s.n = n;
  s.k = k;
  s.t = t;
  s.d = d;
  return s;
}

TEST(Search, Examples) {
  EXPECT_EQ(max_intersection(spec_of(3, 6, 0, 2, 2)).maximum, 6u);
  EXPECT_EQ(max_intersection(spec_of(3, 5, 0, 3, 2)).maximum, 8u);
  EXPECT_EQ(max_intersection(spec_of(3, 4, 1, 1, 1)).maximum, 3u);
  EXPECT_EQ(max_intersection(spec_of(2, 8, 0, 2, 2)).maximum, 6u);
}

// Frozen from an independent itertools brute force. The closed form
// n3_double gives 20 here; the search value is the true maximum.
TEST(Search, TernaryDoubleAtSevenFour) {
  const SearchReport r = max_intersection(spec_of(3, 7, 0, 4, 2));
  EXPECT_EQ(r.maximum, 21u);
  const Word x = parse_word("0120120", 3);
  const Word y = parse_word("0210210", 3);
  EXPECT_EQ(deletion_distance(x, y), 2);
  EXPECT_EQ(intersection_size(x, 4, y, 4), 21u);
}

TEST(Search, ImpossibleSpecIsZero) {
  const SearchReport r = max_intersection(spec_of(3, 3, 0, 4, 1));
  EXPECT_EQ(r.maximum, 0u);
  EXPECT_TRUE(r.witnesses.empty());
}

TEST(Search, ValidatesSpec) {
  EXPECT_THROW(validate(spec_of(1, 3, 0, 1, 1)), Error);
  EXPECT_THROW(validate(spec_of(3, 0, 0, 0, 1)), Error);
  EXPECT_THROW(validate(spec_of(3, 3, -1, 1, 1)), Error);
  EXPECT_THROW(validate(spec_of(3, 3, 0, -1, 1)), Error);
  EXPECT_THROW(validate(spec_of(3, 3, 0, 1, -1)), Error);
  EXPECT_NO_THROW(validate(spec_of(3, 3, 0, 1, 0)));
}

TEST(Search, BudgetRefusalCarriesEstimate) {
  SearchSpec s = spec_of(3, 9, 0, 3, 2);
  s.budget = 1e6;
  try {
    max_intersection(s);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
    EXPECT_GT(e.estimate(), 1e6);
    EXPECT_EQ(e.budget(), 1e6);
    EXPECT_DOUBLE_EQ(e.estimate(), estimate_work(s));
  }
}

TEST(Search, ZeroDistanceIsMaxBall) {
  for (int n = 1; n <= 6; ++n) {
    for (int t = 0; t <= n; ++t) {
      EXPECT_EQ(static_cast<std::int64_t>(max_intersection(spec_of(3, n, 0, t, 0)).maximum),
                d3(n, t));
    }
  }
}

TEST(Search, WitnessesAreValidAndOrdered) {
  SearchSpec s = spec_of(3, 6, 0, 2, 2);
  s.witness_cap = 3;
  const SearchReport r = max_intersection(s);
  EXPECT_EQ(r.witnesses.size(), 3u);
  EXPECT_GE(r.witness_count, r.witnesses.size());
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    const Witness& w = r.witnesses[i];
    EXPECT_GE(deletion_distance(w.x, w.y), 2);
    EXPECT_EQ(intersection_size(w.x, 2, w.y, 2), r.maximum);
    EXPECT_EQ(w.size, r.maximum);
    if (i > 0) {
      const Witness& p = r.witnesses[i - 1];
      EXPECT_TRUE(p.x < w.x || (p.x == w.x && p.y < w.y));
    }
  }
}

TEST(Search, CanonicalForms) {
  EXPECT_TRUE(is_canonical(parse_word("0120", 3), false));
  EXPECT_FALSE(is_canonical(parse_word("1020", 3), false));
  // 0012 reversed is 2100, normal form 0122 > 0012; 0122 reversed is 2210,
  // normal form 0012 < 0122.
  EXPECT_TRUE(is_canonical(parse_word("0012", 3), true));
  EXPECT_FALSE(is_canonical(parse_word("0122", 3), true));
}

// Reduced and unreduced scans agree on every small spec.
TEST(Search, ReductionIsSound) {
  for (int q = 2; q <= 3; ++q) {
    for (int n = 1; n <= 5; ++n) {
      for (int k = 0; k <= 1; ++k) {
        for (int t = 1; t <= 2; ++t) {
          for (int d = 1; d <= 2; ++d) {
            SearchSpec a = spec_of(q, n, k, t, d);
            SearchSpec b = a;
            b.symmetry_reduction = false;
            const SearchReport ra = max_intersection(a);
            const SearchReport rb = max_intersection(b);
            EXPECT_EQ(ra.maximum, rb.maximum) << q << ' ' << n << ' ' << k << ' ' << t << ' ' << d;
            EXPECT_LE(ra.pairs_examined, rb.pairs_examined);
          }
        }
      }
    }
  }
}

TEST(Search, DeterministicAcrossWorkerCounts) {
  SearchSpec s = spec_of(3, 6, 0, 3, 2);
  s.witness_cap = 1000;
  s.workers = 1;
  const SearchReport one = max_intersection(s);
  for (int workers : {2, 3, 7}) {
    s.workers = workers;
    const SearchReport many = max_intersection(s);
    EXPECT_EQ(many.maximum, one.maximum);
    EXPECT_EQ(many.witness_count, one.witness_count);
    EXPECT_EQ(many.witnesses, one.witnesses);
    EXPECT_EQ(many.pairs_examined, one.pairs_examined);
    EXPECT_EQ(many.pairs_scored, one.pairs_scored);
    EXPECT_EQ(many.classes_examined, one.classes_examined);
  }
}

TEST(Search, AtLeastExtremalPairs) {
  for (int n = 6; n <= 7; ++n) {
    for (int t = 2; t <= 4; ++t) {
      const auto best = max_intersection(spec_of(3, n, 0, t, 2)).maximum;
      for (const ExtremalPair& p : {pair_m1(n), pair_m0(n)}) {
        EXPECT_GE(best, intersection_size(p.x, t, p.y, t)) << n << ',' << t;
      }
    }
  }
}

TEST(Search, ObjectiveInvariance) {
  // The maximizing pair set is closed under relabeling and, for k = 0,
  // reversal; check with an uncapped unreduced scan.
  SearchSpec s = spec_of(3, 5, 0, 2, 2);
  s.symmetry_reduction = false;
  s.witness_cap = 100000;
  const SearchReport r = max_intersection(s);
  ASSERT_EQ(r.witnesses.size(), r.witness_count);
  std::set<std::pair<Word, Word>> all;
  for (const Witness& w : r.witnesses) all.insert({w.x, w.y});
  const Ordering pi({2, 0, 1});
  for (const Witness& w : r.witnesses) {
    EXPECT_TRUE(all.contains({relabel(w.x, pi), relabel(w.y, pi)}));
    EXPECT_TRUE(all.contains({reverse(w.x), reverse(w.y)}));
  }
}

}  // namespace
}  // namespace seqrecon
