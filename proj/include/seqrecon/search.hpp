#pragma once

#include <cstdint>
#include <vector>

#include "seqrecon/word.hpp"

namespace seqrecon {

inline constexpr double kDefaultSearchBudget = 1e10;
inline constexpr int kDefaultWitnessCap = 64;

// Maximize |D_{t+k}(x) ∩ D_t(y)| over x in Z_q^{n+k}, y in Z_q^n with
// deletion distance >= d.
struct SearchSpec {
  int q = 3;
  int n = 1;
  int k = 0;
  int t = 0;
  int d = 0;
  bool symmetry_reduction = true;
  int witness_cap = kDefaultWitnessCap;
  int workers = 0;  // 0 selects the hardware concurrency
  double budget = kDefaultSearchBudget;  // DP cell-operation estimate
};

struct Witness {
  Word x;
  Word y;
  std::uint64_t size;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct SearchReport {
  SearchSpec spec;
  std::uint64_t maximum = 0;
  // Exact number of examined pairs attaining the maximum, even when the
  // witness list is truncated at spec.witness_cap.
  std::uint64_t witness_count = 0;
  std::vector<Witness> witnesses;  // lexicographic by (x, y)
  std::uint64_t pairs_examined = 0;
  std::uint64_t pairs_scored = 0;  // pairs that passed the distance filter
  std::uint64_t classes_examined = 0;
  double elapsed_ms = 0.0;
};

// Throws kDomain on an invalid spec.
void validate(const SearchSpec& spec);

// Estimated DP cell operations for the search as configured.
double estimate_work(const SearchSpec& spec);

// True iff x is the lexicographically least word in its orbit under symbol
// relabeling (and reversal, when `with_reversal`).
bool is_canonical(const Word& x, bool with_reversal);

// Exhaustive maximization. Only x is restricted to canonical representatives;
// y always ranges over all of Z_q^n. Throws BudgetExceeded (carrying the
// estimate) before doing any work when the estimate exceeds spec.budget.
SearchReport max_intersection(const SearchSpec& spec);

}  // namespace seqrecon
