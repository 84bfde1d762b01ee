#include <gtest/gtest.h>

#include "seqrecon/claims.hpp"
#include "seqrecon/error.hpp"

namespace seqrecon {
namespace {

TEST(Claims, Examples) {
  const VerificationRecord t4 = verify_claim("theorem4", {3, 7, 3, 2});
  EXPECT_EQ(t4.expected, 20);
  EXPECT_EQ(t4.observed, 20);
  EXPECT_TRUE(t4.pass);

  const VerificationRecord l11 = verify_claim("lemma11", {3, 6, 2, 0});
  EXPECT_EQ(l11.expected, 14);
  EXPECT_LE(l11.observed, 14);
  EXPECT_EQ(l11.relation, Relation::kAtMost);
  EXPECT_TRUE(l11.pass);

  const VerificationRecord l6 = verify_claim("lemma6", {3, 5, 1, 1});
  EXPECT_EQ(l6.observed, 3);
  EXPECT_TRUE(l6.pass);
}

TEST(Claims, Errors) {
  try {
    verify_claim("theorem9", {3, 6, 2, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownClaim);
  }
  try {
    verify_claim("theorem2", {2, 7, 2, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomain);
  }
  EXPECT_THROW(verify_claim("theorem4", {3, 8, 3, 2}, {0, 1e3}), BudgetExceeded);
}

TEST(Claims, RegistryIsConsistent) {
  for (const auto& id : claim_ids()) EXPECT_TRUE(is_claim(id)) << id;
  EXPECT_FALSE(is_claim("all"));
  for (const SweepEntry& e : desk_sweep()) EXPECT_TRUE(is_claim(e.claim)) << e.claim;
}

TEST(Claims, SweepSkipsUncoveredPoints) {
  const auto rows = verify_sweep("theorem4", 3, {4, 6}, {0, 6}, 2);
  for (const auto& r : rows) {
    EXPECT_GE(r.params.t, 2);
    EXPECT_LE(r.params.t, r.params.n);
    EXPECT_TRUE(r.pass) << r.params.n << ',' << r.params.t;
  }
  EXPECT_EQ(rows.size(), 3u + 4u + 5u);
}

TEST(Claims, ClosedFormClaimsPass) {
  for (const char* id : {"eq3", "eq4", "eq9", "lemma16", "lemma17", "lemma18", "lemma15",
                         "theorem5_m0", "theorem5_m1"}) {
    const auto rows = verify_sweep(id, 3, {0, 30}, {0, 20}, 2);
    EXPECT_FALSE(rows.empty()) << id;
    for (const auto& r : rows) EXPECT_TRUE(r.pass) << id << ' ' << r.params.n << ',' << r.params.t;
  }
}

TEST(Claims, MRecurrenceFailsNearDiagonalOnly) {
  const auto m1_rows = verify_sweep("eq8_m1", 3, {3, 60}, {2, 20}, 2);
  for (const auto& r : m1_rows) {
    const int gap = r.params.n - r.params.t;
    EXPECT_EQ(r.pass, gap >= 4 || gap == 1) << r.params.n << ',' << r.params.t;
  }
  const auto m0_rows = verify_sweep("eq8_m0", 3, {3, 60}, {2, 20}, 2);
  for (const auto& r : m0_rows) {
    const int gap = r.params.n - r.params.t;
    if (gap >= 6) EXPECT_TRUE(r.pass) << r.params.n << ',' << r.params.t;
  }
}

TEST(Claims, SearchBackedClaims) {
  EXPECT_TRUE(verify_claim("theorem1", {3, 5, 2, 1}).pass);
  EXPECT_TRUE(verify_claim("theorem1", {2, 6, 3, 1}).pass);
  EXPECT_TRUE(verify_claim("theorem2", {2, 8, 2, 2}).pass);
  EXPECT_TRUE(verify_claim("theorem3", {2, 6, 2, 2}).pass);
  EXPECT_TRUE(verify_claim("lemma7", {3, 5, 2, 1}).pass);
  const VerificationRecord r = verify_claim("reconstruction", {3, 6, 2, 2});
  EXPECT_TRUE(r.pass) << r.detail;
}

}  // namespace
}  // namespace seqrecon
