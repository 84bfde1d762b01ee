// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison is exact; runtime limits are listed with
// each criterion and enforced.
//
// SEQRECON_ACCEPTANCE_EXTENDED=1 adds the n = 9, t in {2,3} searches to
// criterion 2.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "seqrecon/claims.hpp"
#include "seqrecon/closed_forms.hpp"
#include "seqrecon/deletion_balls.hpp"
#include "seqrecon/error.hpp"
#include "seqrecon/extremal.hpp"
#include "seqrecon/reconstruct.hpp"
#include "seqrecon/search.hpp"

namespace {

using namespace seqrecon;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> first_failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      pass = false;
      ++failures;
      if (first_failures.size() < 4) first_failures.push_back(what);
    }
  }
};

std::string cell(int n, int t) {
  return "(" + std::to_string(n) + "," + std::to_string(t) + ")";
}

std::uint64_t search(int q, int n, int k, int t, int d, bool reduce = true) {
  SearchSpec s;
  s.q = q;
  s.n = n;
  s.k = k;
  s.t = t;
  s.d = d;
  s.symmetry_reduction = reduce;
  s.witness_cap = 0;
  s.budget = 1e12;
  return max_intersection(s).maximum;
}

void criterion1(Outcome& o) {
  const struct { int n, t; std::int64_t value; } specials[] = {{4, 2, 4}, {5, 2, 6}, {5, 3, 8}};
  for (const auto& s : specials) {
    const std::int64_t formula = n3_double(s.n, s.t).value;
    const auto found = static_cast<std::int64_t>(search(3, s.n, 0, s.t, 2));
    o.expect(formula == s.value && found == s.value,
             "N3" + cell(s.n, s.t) + ": formula " + std::to_string(formula) + ", search " +
                 std::to_string(found));
  }
  o.expect(n3_double(10, 6).value == 74, "n3_double(10,6)");
  o.expect(m1(10, 6).value == 73, "m1(10,6)");
  o.expect(m0(10, 6).value == 74, "m0(10,6)");
  o.detail << "N3(4,2,2)=4, N3(5,2,2)=6, N3(5,2,3)=8 by search and formula; n3_double(10,6)="
           << n3_double(10, 6).value << " m1=" << m1(10, 6).value << " m0=" << m0(10, 6).value;
}

void criterion2(Outcome& o) {
  int cells = 0;
  std::vector<std::pair<int, int>> grid;
  for (int t = 2; t <= 5; ++t) {
    for (int n = t; n <= 8; ++n) grid.emplace_back(n, t);
  }
  const char* ext = std::getenv("SEQRECON_ACCEPTANCE_EXTENDED");
  const bool extended = ext != nullptr && std::string(ext) == "1";
  if (extended) {
    grid.emplace_back(9, 2);
    grid.emplace_back(9, 3);
  }
  for (const auto& [n, t] : grid) {
    const std::int64_t formula = n3_double(n, t).value;
    const auto found = static_cast<std::int64_t>(search(3, n, 0, t, 2));
    o.expect(formula == found, "cell " + cell(n, t) + ": formula " + std::to_string(formula) +
                                   ", search " + std::to_string(found));
    ++cells;
  }
  o.detail << cells << " cells (t=2..5, t<=n<=8" << (extended ? ", plus n=9 t=2,3" : "")
           << ") search == n3_double";
}

void criterion3(Outcome& o) {
  int cells = 0;
  for (int t = 2; t <= 6; ++t) {
    for (int n = std::max(9, 3 * t / 2 + 1); n <= 20; ++n) {
      const ExtremalPair a = pair_m1(n);
      const ExtremalPair b = pair_m0(n);
      const auto ia = static_cast<std::int64_t>(intersection_size(a.x, t, a.y, t));
      const auto ib = static_cast<std::int64_t>(intersection_size(b.x, t, b.y, t));
      o.expect(ia == m1(n, t).value, "pair_m1 at " + cell(n, t));
      o.expect(ib == m0(n, t).value, "pair_m0 at " + cell(n, t));
      o.expect(deletion_distance(a.x, a.y) == 2 && deletion_distance(b.x, b.y) == 2,
               "distance at n=" + std::to_string(n));
      ++cells;
    }
  }
  o.detail << cells << " cells, both pairs at distance 2 meet m1/m0 exactly";
}

void criterion4(Outcome& o) {
  int cells = 0;
  for (int q = 2; q <= 3; ++q) {
    for (int n = 2; n <= 7; ++n) {
      for (int t = 1; t <= n - 1; ++t) {
        const std::int64_t formula = n_single(q, n, t).value;
        const auto found = static_cast<std::int64_t>(search(q, n, 0, t, 1));
        const ExtremalPair p = pair_thm1(q, n);
        const auto attained = static_cast<std::int64_t>(intersection_size(p.x, t, p.y, t));
        o.expect(found == formula && attained == formula,
                 "q=" + std::to_string(q) + " " + cell(n, t) + ": formula " +
                     std::to_string(formula) + ", search " + std::to_string(found) +
                     ", pair " + std::to_string(attained));
        ++cells;
      }
    }
  }
  o.detail << cells << " cells, search == n_single == pair_thm1";
}

void criterion5(Outcome& o) {
  for (int n = 8; n <= 10; ++n) {
    const std::int64_t formula = n2_double(n, 2).value;
    const auto found = static_cast<std::int64_t>(search(2, n, 0, 2, 2));
    o.expect(found == formula, "n=" + std::to_string(n) + ": formula " +
                                   std::to_string(formula) + ", search " + std::to_string(found));
    o.detail << "N2(" << n << ",2,2)=" << found << ' ';
  }
}

void criterion6(Outcome& o) {
  int cells = 0;
  for (int t = 1; t <= 2; ++t) {
    for (int n = 4 * t - 2; n <= 10; ++n) {
      if (n < 1) continue;
      const auto found = static_cast<std::int64_t>(search(2, n, 0, t, t));
      o.expect(found == binomial(2 * t, t), "t=" + std::to_string(t) + " n=" + std::to_string(n) +
                                                 ": search " + std::to_string(found));
      ++cells;
    }
  }
  o.detail << cells << " cells, search == C(2t,t)";
}

void criterion7(Outcome& o) {
  int cells = 0;
  for (int n = 4; n <= 7; ++n) {
    for (int t = 1; t <= n; ++t) {
      const std::int64_t formula = n3_cross(n, t).value;
      const auto found = static_cast<std::int64_t>(search(3, n, 1, t, 1));
      o.expect(found == formula, cell(n, t) + ": formula " + std::to_string(formula) +
                                     ", search " + std::to_string(found));
      if (t == 1) o.expect(found == 3, "t=1 row at n=" + std::to_string(n));
      ++cells;
    }
  }
  o.detail << cells << " cells, search(k=1,d=1) == n3_cross; t=1 row is 3";
}

void criterion8(Outcome& o) {
  int cells = 0;
  int attained = 0;
  for (int n = 4; n <= 8; ++n) {
    for (int t = 1; t <= n - 2; ++t) {
      const VerificationRecord r = verify_claim("lemma11", {3, n, t, 0});
      o.expect(r.pass, cell(n, t) + ": observed " + std::to_string(r.observed) + " > bound " +
                           std::to_string(r.expected));
      attained += r.observed == r.expected ? 1 : 0;
      ++cells;
    }
  }
  o.detail << cells << " cells, every non-periodic x within the bound; bound attained in "
           << attained << " of " << cells;
}

void criterion9(Outcome& o) {
  for (int k = 3; k <= 12; ++k) {
    o.expect(f_gap(3 * k + 1, 2 * k).value == -1, "f(3k+1,2k) at k=" + std::to_string(k));
    o.expect(f_gap(3 * k + 2, 2 * k + 1).value == 0, "f(3k+2,2k+1) at k=" + std::to_string(k));
  }
  for (int t = 6; t <= 10; ++t) {
    for (int n = 3 * t; n <= 50; ++n) o.expect(f_gap(n, t).value > 0, "f>0 at " + cell(n, t));
  }
  for (int t = 0; t <= 30; ++t) {
    for (int n = t + 1; n <= 60; ++n) {
      o.expect(d3(n, t) == d3(n - 1, t) + d3(n - 2, t - 1) + d3(n - 3, t - 2), "eq3 at " + cell(n, t));
      o.expect(d3(n, t) <= 3 * d3(n - 1, t), "eq9 at " + cell(n, t));
    }
  }
  for (int n = 0; n <= 60; ++n) {
    for (int t = 0; t <= n; ++t) {
      if (3 * t >= 2 * n) o.expect(d3(n, t) == pow3(n - t), "eq4 at " + cell(n, t));
    }
  }
  // Recurrence for M_0 and M_1 on the full stated range.
  int rec_fail = 0;
  int rec_points = 0;
  int min_ok_gap[2] = {0, 0};
  for (int i = 0; i <= 1; ++i) {
    auto m = [i](int a, int b) { return i == 0 ? m0(a, b).value : m1(a, b).value; };
    for (int t = 2; t <= 20; ++t) {
      for (int n = t + 1; n <= 60; ++n) {
        const bool ok = m(n, t) == m(n - 1, t) + m(n - 2, t - 1) + m(n - 3, t - 2);
        ++rec_points;
        if (!ok) {
          ++rec_fail;
          min_ok_gap[i] = std::max(min_ok_gap[i], n - t + 1);
        }
        o.expect(ok, "recurrence M" + std::to_string(i) + " at " + cell(n, t) + ": " +
                         std::to_string(m(n, t)) + " vs " +
                         std::to_string(m(n - 1, t) + m(n - 2, t - 1) + m(n - 3, t - 2)));
      }
    }
  }
  o.detail << "gap identities and f>0 grid, ball recurrence grids; M recurrence fails at " << rec_fail
           << " of " << rec_points << " points (holds for n >= t+" << min_ok_gap[1]
           << " for M1, n >= t+" << min_ok_gap[0] << " for M0)";
}

void criterion10(Outcome& o) {
  std::mt19937_64 rng(20241019);
  auto random_word = [&](int q, int n) {
    std::vector<int> s(n);
    for (auto& v : s) v = static_cast<int>(rng() % q);
    return Word(q, s);
  };
  int oracle_cases = 0;
  for (int i = 0; i < 1000; ++i) {
    const int q = 2 + static_cast<int>(rng() % 3);
    const int n = static_cast<int>(rng() % 13);
    const Word x = random_word(q, n);
    const Word y = random_word(q, n);
    const int t = static_cast<int>(rng() % (n + 1));
    const WordSet bx = enumerate_ball_reference(x, t);
    const WordSet common = set_intersection(bx, enumerate_ball_reference(y, t));
    o.expect(ball_size(x, t) == bx.size() && enumerate_ball(x, t) == bx, "ball " + x.str());
    o.expect(intersection_size(x, t, y, t) == common.size() &&
                 intersect_balls(x, t, y, t) == common,
             "intersection " + x.str() + " " + y.str());
    std::vector<int> perm(q);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Ordering pi(perm);
    const auto base = intersection_size(x, t, y, t);
    o.expect(intersection_size(relabel(x, pi), t, relabel(y, pi), t) == base &&
                 intersection_size(reverse(x), t, reverse(y), t) == base &&
                 ball_size(relabel(x, pi), t) == ball_size(x, t),
             "invariance " + x.str() + " " + y.str());
    ++oracle_cases;
  }
  int specs = 0;
  for (int q = 2; q <= 3; ++q) {
    for (int n = 1; n <= 5; ++n) {
      for (int k = 0; k <= 1; ++k) {
        for (int t = 1; t <= 2; ++t) {
          for (int d = 1; d <= 2; ++d) {
            o.expect(search(q, n, k, t, d, true) == search(q, n, k, t, d, false),
                     "reduction q=" + std::to_string(q) + " n=" + std::to_string(n));
            ++specs;
          }
        }
      }
    }
  }
  o.detail << oracle_cases << " random oracle/invariance cases, " << specs
           << " reduced-vs-unreduced specs, " << o.failures << " failures";
}

void criterion11(Outcome& o) {
  const SharpnessReport s = exhaustive_sharpness(3, 6, 2, 2);
  o.expect(s.threshold == 7, "threshold " + std::to_string(s.threshold));
  o.expect(s.failures == 0, std::to_string(s.failures) + " subsets failed to decode");
  o.expect(s.max_pair_intersection <= 6, "code pair shares " + std::to_string(s.max_pair_intersection));
  const SimulationReport r = simulate(3, 6, 2, 2, 100, 0);
  o.expect(r.unique == 100 && r.channels == 7, std::to_string(r.unique) + "/100 unique");
  o.detail << s.subsets_checked << " subsets of " << s.codewords_checked << " codeword balls decode uniquely; "
           << "simulation " << r.unique << "/100 unique at " << r.channels << " channels";
}

// Cells beyond desk brute force: confirm the refusal and that the extremal
// pairs realize the dispatcher value on the t >= 6 band.
void criterion12(Outcome& o) {
  SearchSpec s;
  s.q = 3;
  s.n = 10;
  s.t = 6;
  s.d = 2;
  const double estimate = estimate_work(s);
  bool refused = false;
  try {
    max_intersection(s);
  } catch (const BudgetExceeded&) {
    refused = true;
  }
  o.expect(refused, "n=10 search was not refused at the default budget");
  int cells = 0;
  for (int t = 6; t <= 10; ++t) {
    for (int n = 3 * t / 2 + 1; n <= 30; ++n) {
      const ExtremalPair a = pair_m1(n);
      const ExtremalPair b = pair_m0(n);
      const auto best = std::max(intersection_size(a.x, t, a.y, t), intersection_size(b.x, t, b.y, t));
      o.expect(static_cast<std::int64_t>(best) == n3_double(n, t).value, "pairs at " + cell(n, t));
      ++cells;
    }
  }
  o.detail << "not reproducible at desk scale: brute force N3(10,2,6) needs ~" << estimate
           << " cell operations (default budget " << kDefaultSearchBudget
           << "); covered instead by criteria 3 and 9, and the extremal pairs realize n3_double on "
           << cells << " cells with t in 6..10, n <= 30";
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "special values", 10, criterion1},
      {2, "ternary double-deletion desk grid", 600, criterion2},
      {3, "extremal lower bound", 10, criterion3},
      {4, "single-deletion maximum", 120, criterion4},
      {5, "binary two-deletion maximum", 120, criterion5},
      {6, "binary d = t maximum", 60, criterion6},
      {7, "unequal-radius maximum", 120, criterion7},
      {8, "non-periodic ball bound", 60, criterion8},
      {9, "gap sign and recurrences", 1, criterion9},
      {10, "property suites", 120, criterion10},
      {11, "reconstruction sharpness", 300, criterion11},
      {12, "desk-scale boundary", 10, criterion12},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = secs <= c.limit_s;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title
              << "): " << o.detail.str() << " [" << o.checks << " checks, " << o.failures
              << " failed, " << secs << " s, limit " << c.limit_s << " s]";
    if (!in_time) std::cout << " over time limit";
    for (const auto& f : o.first_failures) std::cout << "\n    failed: " << f;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
