#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "seqrecon/word.hpp"

namespace seqrecon {

enum class ClaimedFormula { kM0, kM1, kNSingle, kNAux, kThreePower, kUnknown };

std::string_view to_string(ClaimedFormula f);

// An explicit word pair together with the distance and intersection value
// claimed for it. y has length n, x has length n + k, and radii are t + k
// on x and t on y.
struct ExtremalPair {
  Word x;
  Word y;
  int claimed_distance;
  int k = 0;
  ClaimedFormula formula;
};

// x = (0,1,2,0,1,2) a_{n-6},  y = (1,0,2,1,0,2) a_{n-6};  n >= 6.
ExtremalPair pair_m1(int n);
// x0 = (0,1,2) a_{n-5} (c,b),  y0 = (1,0,2) a_{n-3}, with (b,c) the last two
// symbols of a_{n-3};  n >= 6.
ExtremalPair pair_m0(int n);
// x = c_q(n, I_q),  y = x with its first two symbols swapped;  n >= 2.
ExtremalPair pair_thm1(int q, int n);
// x = (0,1,2,0,1) w,  y = (1,0,2,1,0) w,  w_i = (i + 1) mod q;  q >= 4, n >= 5.
ExtremalPair pair_conjecture(int q, int n);

// The closed-form value claimed for |D_{t+k}(x) ∩ D_t(y)|, or nullopt when
// the pair carries no claim at this t.
std::optional<std::int64_t> claimed_intersection(const ExtremalPair& pair,
                                                 int t);

}  // namespace seqrecon
