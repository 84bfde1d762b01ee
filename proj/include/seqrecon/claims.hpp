#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "seqrecon/closed_forms.hpp"
#include "seqrecon/search.hpp"

namespace seqrecon {

// How `observed` is compared with `expected`.
enum class Relation { kEqual, kAtMost, kAtLeast };
std::string_view to_string(Relation r);

struct ClaimParams {
  int q = 3;
  int n = 0;
  int t = 0;
  int d = 0;
};

struct VerificationRecord {
  std::string claim;
  ClaimParams params;
  Relation relation;
  std::int64_t expected;
  std::int64_t observed;
  bool pass;
  std::string detail;
};

struct ClaimOptions {
  int workers = 0;
  double budget = kDefaultSearchBudget;
};

// Registered claim ids, in display order.
const std::vector<std::string>& claim_ids();
bool is_claim(std::string_view id);

// Whether `p` lies inside the claim's stated range. Claims tied to one
// alphabet or distance ignore the corresponding field.
bool claim_applies(std::string_view id, const ClaimParams& p);

// Throws kUnknownClaim for an unregistered id, kDomain outside the claim's
// range, and BudgetExceeded when a search would exceed opts.budget.
VerificationRecord verify_claim(std::string_view id, const ClaimParams& p,
                                const ClaimOptions& opts = {});

// Every applicable point of the (n,t) rectangle, row-major in n then t.
std::vector<VerificationRecord> verify_sweep(std::string_view id, int q,
                                             IntRange n_range,
                                             IntRange t_range, int d,
                                             const ClaimOptions& opts = {});

struct SweepEntry {
  std::string claim;
  int q;
  IntRange n_range;
  IntRange t_range;
  int d;
};

// The fixed grid run by `verify all --desk`.
const std::vector<SweepEntry>& desk_sweep();

}  // namespace seqrecon
