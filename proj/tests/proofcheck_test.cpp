#include "equiline/proofcheck.hpp"

#include <gtest/gtest.h>

#include "equiline/errors.hpp"

namespace equiline {
namespace {

// Oracle: alpha for equi_six straight from the unsimplified pieces, i.e. the
// Hirzebruch linear coefficient (-1 on 2- and 3-point lines, s-4 on s >= 5)
// plus C(i,2) + C(j,2) - ij, computed with plain integers times two.
long twice_equi_six_alpha(long i, long j) {
  const long s = i + j;
  const long hirzebruch = s <= 3 ? -1 : (s == 4 ? 0 : s - 4);
  const long pairs = i * (i - 1) / 2 + j * (j - 1) / 2 - i * j;
  return 2 * (hirzebruch + pairs);
}

// Oracle: equi_four alpha as (4s - s^2) + (s - (i-j)^2).
long equi_four_alpha(long i, long j) {
  const long s = i + j;
  return (4 * s - s * s) + (s - (i - j) * (i - j));
}

TEST(BuildTable, EquiSixListedCells) {
  const CoefficientTable t = build_table(BoundTheorem::equi_six, 8);
  EXPECT_EQ(t.entries.at({1, 1}), -2);
  EXPECT_EQ(t.entries.at({1, 2}), -2);
  EXPECT_EQ(t.entries.at({2, 1}), -2);
  EXPECT_EQ(t.entries.at({2, 2}), -2);
  EXPECT_EQ(t.entries.at({2, 3}), -1);
  EXPECT_EQ(t.entries.at({3, 2}), -1);
  EXPECT_EQ(t.entries.at({3, 3}), -1);
  EXPECT_EQ(t.entries.at({0, 2}), 0);
  EXPECT_EQ(t.entries.size(), 3u + 4 + 5 + 6 + 7 + 8 + 9);
}

TEST(BuildTable, EquiFourListedCells) {
  const CoefficientTable t = build_table(BoundTheorem::equi_four, 5);
  EXPECT_EQ(t.entries.at({1, 1}), 6);
  EXPECT_EQ(t.entries.at({2, 2}), 4);
  EXPECT_EQ(t.entries.at({0, 2}), 2);
  EXPECT_EQ(t.entries.at({1, 2}), 5);
  EXPECT_EQ(t.entries.at({1, 3}), 0);
}

TEST(BuildTable, MatchesOracles) {
  const CoefficientTable six = build_table(BoundTheorem::equi_six, 30);
  const CoefficientTable four = build_table(BoundTheorem::equi_four, 30);
  for (const auto& [c, alpha] : six.entries) ASSERT_EQ(2 * alpha, Rational(twice_equi_six_alpha(c.green, c.red)));
  for (const auto& [c, alpha] : four.entries) ASSERT_EQ(alpha, Rational(equi_four_alpha(c.green, c.red)));
}

TEST(BuildTable, EquiSixDecomposesIntoItsTwoTemplates) {
  const CoefficientTable t = build_table(BoundTheorem::equi_six, 20);
  for (const auto& [c, alpha] : t.entries) {
    ASSERT_EQ(alpha, hirzebruch_rewrite_coefficient(c.total()) + pair_difference_coefficient(c.green, c.red));
  }
}

TEST(BuildTable, RejectsSmallWindowAndOtherTheorems) {
  EXPECT_THROW(build_table(BoundTheorem::equi_six, 3), InputError);
  EXPECT_THROW(build_table(BoundTheorem::ps2, 8), InputError);
}

TEST(VerifySignClaim, EquiSixAtMinimalWindow) {
  const Certificate c = verify_sign_claim(BoundTheorem::equi_six, 8);
  EXPECT_TRUE(c.verified);
  EXPECT_EQ(c.exceptional.size(), 7u);
  EXPECT_EQ(c.exceptional, proof_template(BoundTheorem::equi_six).claim.exceptional);
  EXPECT_EQ(c.exceptional_sign, ExceptionalSign::negative);
}

TEST(VerifySignClaim, EquiFourAtMinimalWindow) {
  const Certificate c = verify_sign_claim(BoundTheorem::equi_four, 5);
  EXPECT_TRUE(c.verified);
  EXPECT_EQ(c.exceptional.size(), 6u);
  EXPECT_EQ(c.exceptional_sign, ExceptionalSign::positive);
}

TEST(VerifySignClaim, WindowIndependentAboveMinimum) {
  for (int w = 8; w <= 40; ++w) EXPECT_TRUE(verify_sign_claim(BoundTheorem::equi_six, w).verified);
  for (int w = 5; w <= 40; ++w) EXPECT_TRUE(verify_sign_claim(BoundTheorem::equi_four, w).verified);
}

TEST(VerifySignClaim, WindowBelowTailThresholdRejected) {
  EXPECT_THROW(verify_sign_claim(BoundTheorem::equi_six, 7), InputError);
  EXPECT_THROW(verify_sign_claim(BoundTheorem::equi_four, 4), InputError);
}

TEST(VerifySignClaim, CorruptedTemplateIsRefutedAtTheRightCell) {
  ProofTemplate mutated = proof_template(BoundTheorem::equi_six);
  mutated.coefficient = [](int i, int j) -> Rational {
    const int s = i + j;
    const Rational h = s <= 3 ? Rational(-1) : (s == 4 ? Rational(1) : Rational(s - 4));
    return pair_difference_coefficient(i, j) + h;
  };
  try {
    verify_sign_claim(mutated, 8);
    FAIL() << "expected ClaimRefutedError";
  } catch (const ClaimRefutedError& e) {
    EXPECT_EQ(e.i(), 2);
    EXPECT_EQ(e.j(), 2);
  }
}

TEST(VerifySignClaim, MissingClaimCellIsRefuted) {
  ProofTemplate weaker = proof_template(BoundTheorem::equi_four);
  weaker.claim.exceptional.erase({2, 2});
  EXPECT_THROW(verify_sign_claim(weaker, 5), ClaimRefutedError);
}

TEST(VerifySignClaim, EquiFourMaxCoefficientGivesSixfoldInequality) {
  const auto& claim = proof_template(BoundTheorem::equi_four).claim.exceptional;
  Rational largest = 0;
  for (const auto& [cell, value] : claim) largest = std::max(largest, value);
  EXPECT_EQ(largest, 6);
  std::vector<Cell> cells;
  for (const auto& entry : claim) cells.push_back(entry.first);
  EXPECT_EQ(cells, info(BoundTheorem::equi_four).proof_cells);
  // Negative side for equi_six: every exceptional value is >= -2.
  const auto& six = proof_template(BoundTheorem::equi_six).claim.exceptional;
  for (const auto& [cell, value] : six) EXPECT_GE(value, -2);
  std::vector<Cell> six_cells;
  for (const auto& entry : six) six_cells.push_back(entry.first);
  std::vector<Cell> expected = info(BoundTheorem::equi_six).proof_cells;
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(six_cells, expected);
}

TEST(IdentitySimplification, HoldsExhaustively) {
  EXPECT_EQ(pair_difference_coefficient(0, 2), 1);
  EXPECT_EQ(pair_difference_coefficient(3, 3), -3);
  EXPECT_TRUE(verify_identity_simplification(2));
  EXPECT_TRUE(verify_identity_simplification(20));
}

TEST(RhsCheck, Examples) {
  const RhsCheck a = rhs_check(BoundTheorem::equi_six, 2, 0);
  EXPECT_EQ(a.combined_rhs, -6);
  EXPECT_EQ(a.bound, 3);
  EXPECT_TRUE(a.consistent);
  const RhsCheck b = rhs_check(BoundTheorem::equi_six, 5, 2);
  EXPECT_EQ(b.closed_form_rhs, -10);
  EXPECT_EQ(b.bound, 5);
  const RhsCheck c = rhs_check(BoundTheorem::equi_four, 2, 0);
  EXPECT_EQ(c.combined_rhs, 20);
  EXPECT_EQ(c.bound, fraction(10, 3));
}

TEST(RhsCheck, AgreesWithBoundFormulas) {
  for (long n = 1; n <= 30; ++n) {
    for (long k = 0; k <= n; ++k) {
      for (BoundTheorem t : {BoundTheorem::equi_six, BoundTheorem::equi_four}) {
        const RhsCheck r = rhs_check(t, n, k);
        ASSERT_TRUE(r.consistent);
        ASSERT_EQ(r.bound, bound_value(t, n, k));
      }
    }
  }
  EXPECT_THROW(rhs_check(BoundTheorem::ps1, 2, 0), InputError);
}

}  // namespace
}  // namespace equiline
