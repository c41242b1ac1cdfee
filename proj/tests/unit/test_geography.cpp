#include <gtest/gtest.h>

#include "fourfold/errors.hpp"
#include "fourfold/expression.hpp"
#include "fourfold/geography.hpp"

namespace fourfold {
namespace {

TEST(RegionMembership, BranchedCoverPoint) {
  const RegionReport r = region_membership(21, 91);
  EXPECT_TRUE(r.claimed_lots);
  EXPECT_FALSE(r.claimed_molti);
  EXPECT_TRUE(r.strict_ht);
  // 21 is odd and 3*91 = 273 > 7*21 + 24 = 171, so the odd-m line holds too.
  EXPECT_TRUE(r.claimed_prop6);
  EXPECT_EQ(r.claimed(), (std::vector<RegionTheorem>{RegionTheorem::Prop6, RegionTheorem::Lots}));
}

TEST(RegionMembership, MoltiBoundary) {
  const RegionReport r = region_membership(6, 31);
  EXPECT_EQ(r.claimed(), std::vector<RegionTheorem>{RegionTheorem::Molti});
  EXPECT_TRUE(r.strict_ht);
  EXPECT_FALSE(region_membership(6, 30).claimed_molti);
}

TEST(RegionMembership, FarBelowEveryLine) {
  const RegionReport r = region_membership(5, 5);
  EXPECT_TRUE(r.claimed().empty());
}

TEST(RegionMembership, StrictWindowEdges) {
  // Strict Hitchin-Thorpe on m CP2 # n CP2bar: 2(2+m+n) > 3|m-n|.
  EXPECT_TRUE(strict_hitchin_thorpe(6, 33));
  EXPECT_FALSE(strict_hitchin_thorpe(6, 34));  // n = 5m + 4
  EXPECT_FALSE(strict_hitchin_thorpe(34, 6));
  EXPECT_TRUE(strict_hitchin_thorpe(33, 6));
}

TEST(Witness, MoltiAtTheCorner) {
  const WitnessResult w = witness(6, 33, RegionTheorem::Molti, 5);
  EXPECT_EQ(w.status, WitnessStatus::Certified) << w.detail;
  EXPECT_EQ(w.family_index, 1);
  EXPECT_EQ(w.blowups, 0);
  EXPECT_EQ(w.expression, "Z(2) # Y(5)");
  ASSERT_TRUE(w.verdict.has_value());
  EXPECT_EQ(w.verdict->lhs, 12);
  EXPECT_EQ(w.verdict->rhs, 5);
  ASSERT_TRUE(w.bandwidth.has_value());
  EXPECT_GE(w.bandwidth->lower_bound, 10);
  EXPECT_TRUE(w.homeomorphic_to_target);
  // The expression re-evaluates to the same manifold.
  const ManifoldSpec again = evaluate(w.expression);
  EXPECT_EQ(again.b_plus, 6);
  EXPECT_EQ(again.b_minus, 33);
}

TEST(Witness, LotsAtTheBranchedCoverPoint) {
  const WitnessResult w = witness(21, 91, RegionTheorem::Lots, 1);
  EXPECT_EQ(w.status, WitnessStatus::Certified) << w.detail;
  EXPECT_EQ(w.family_index, 4);
  EXPECT_EQ(w.blowups, 32);
  EXPECT_EQ(w.verdict->lhs, 120);
  EXPECT_EQ(w.verdict->rhs, 58);
  EXPECT_EQ(w.expression, "Z(8) # R22 # Y(1) # 32*CP2bar");
}

TEST(Witness, NegativeBlowUpsAreAGap) {
  const WitnessResult w = witness(6, 31, RegionTheorem::Molti, 1);
  EXPECT_EQ(w.status, WitnessStatus::NegativeBlowups);
  EXPECT_EQ(w.blowups, -2);
  EXPECT_FALSE(w.certified());
  EXPECT_FALSE(w.manifold.has_value());
}

TEST(Witness, ThresholdMissIsAGap) {
  const WitnessResult w = witness(14, 49, RegionTheorem::Molti, 1);
  EXPECT_EQ(w.status, WitnessStatus::ObstructionThresholdMissed);
  EXPECT_EQ(w.verdict->lhs, 36);
  EXPECT_EQ(w.verdict->rhs, 37);
  EXPECT_EQ(witness(14, 50, RegionTheorem::Molti, 1).status, WitnessStatus::Certified);
}

TEST(Witness, Prop6UsesTheSinglePieceBound) {
  const WitnessResult w = witness(3, 16, RegionTheorem::Prop6);
  EXPECT_EQ(w.status, WitnessStatus::Certified) << w.detail;
  EXPECT_EQ(w.expression, "Z(2) # 2*CP2bar");
  EXPECT_EQ(w.verdict->theorem, Theorem::SinglePieceBlowup);
  EXPECT_FALSE(w.bandwidth.has_value());
  EXPECT_EQ(witness(3, 15, RegionTheorem::Prop6).status, WitnessStatus::ObstructionThresholdMissed);
}

TEST(Witness, SpinTag) {
  const WitnessResult w = witness(0, 4, RegionTheorem::Spin, 3);
  EXPECT_EQ(w.status, WitnessStatus::Certified);
  EXPECT_EQ(w.expression, "X(2) # Y(0) # Y(3)");
}

TEST(Witness, Errors) {
  EXPECT_THROW(witness(7, 60, RegionTheorem::Molti), ParameterOutOfRange);
  EXPECT_THROW(witness(2, 60, RegionTheorem::Molti), ParameterOutOfRange);
  EXPECT_THROW(witness(7, 60, RegionTheorem::Lots), ParameterOutOfRange);
  EXPECT_THROW(witness(4, 60, RegionTheorem::Prop6), ParameterOutOfRange);
  EXPECT_THROW(witness(1, 60, RegionTheorem::Prop6), ParameterOutOfRange);
  EXPECT_THROW(witness(-1, 60, RegionTheorem::Prop6), ParameterOutOfRange);
  EXPECT_THROW(witness(6, 40, RegionTheorem::Molti, -1), ParameterOutOfRange);
  EXPECT_THROW(witness(6, kMaxParameter + 1, RegionTheorem::Molti), ParameterOutOfRange);
  EXPECT_THROW(parse_region_theorem("oui"), UnknownTheorem);
  EXPECT_EQ(parse_region_theorem("lots"), RegionTheorem::Lots);
}

TEST(SpinFamily, FourThree) {
  const SpinFamilyResult s = spin_family(4, 3);
  EXPECT_EQ(s.euler, 100);
  EXPECT_EQ(s.signature, -64);
  EXPECT_EQ(s.hitchin_thorpe, HitchinThorpe::StrictlySatisfied);
  EXPECT_EQ(s.verdict.status, VerdictStatus::Obstructed);
  EXPECT_EQ(s.verdict.rhs, 16);
  EXPECT_EQ(s.verdict.lhs, 24);
  EXPECT_GE(s.bandwidth.lower_bound, 6);
  EXPECT_TRUE(s.certified());
}

TEST(SpinFamily, FiveOne) {
  const SpinFamilyResult s = spin_family(5, 1);
  EXPECT_EQ(s.euler, 124);
  EXPECT_EQ(s.signature, -80);
  EXPECT_TRUE(s.homeomorphic_to_target);
  EXPECT_EQ(normal_form(s.manifold.form), UnimodularForm::even(-10, 21));
  EXPECT_EQ(normal_form(s.target.form), UnimodularForm::even(-10, 21));
}

TEST(SpinFamily, TooSmall) {
  EXPECT_THROW(spin_family(3, 1), ParameterOutOfRange);
  EXPECT_THROW(spin_family(4, -1), ParameterOutOfRange);
}

TEST(Scan, MoltiColumn) {
  const auto reports = scan({6, 6}, {30, 35});
  ASSERT_EQ(reports.size(), 6u);
  for (const auto& r : reports) EXPECT_EQ(r.claimed_molti, r.n >= 31) << r.n;
}

TEST(Scan, LotsCertifiedFrom47) {
  const auto reports = scan({9, 9}, {33, 47}, {true, 1});
  ASSERT_EQ(reports.size(), 15u);
  for (const auto& r : reports) {
    EXPECT_EQ(r.claimed_lots, 3 * r.n > 7 * 9 + 36) << r.n;
    const auto certified = r.certified();
    const bool lots_certified = std::find(certified.begin(), certified.end(), RegionTheorem::Lots) != certified.end();
    EXPECT_EQ(lots_certified, r.n >= 47) << r.n;
  }
  EXPECT_TRUE(region_membership(9, 34).claimed_lots);
  EXPECT_FALSE(region_membership(9, 33).claimed_lots);
}

TEST(Scan, EmptyRangeAndOrder) {
  EXPECT_TRUE(scan({5, 4}, {0, 10}).empty());
  EXPECT_TRUE(scan({0, 3}, {10, 9}).empty());
  const auto reports = scan({1, 3}, {2, 4});
  ASSERT_EQ(reports.size(), 9u);
  for (std::size_t i = 1; i < reports.size(); ++i)
    EXPECT_TRUE(std::make_pair(reports[i - 1].m, reports[i - 1].n) < std::make_pair(reports[i].m, reports[i].n));
}

TEST(Scan, OutOfCatalogParametersAreRecorded) {
  // m = 2 mod 4 with large n: the Z index 2j stays in range; the gap path
  // is exercised with a tiny odd m whose Z index is below the catalog range.
  const auto reports = scan({1, 1}, {40, 40}, {true, 1});
  ASSERT_EQ(reports.size(), 1u);
  ASSERT_EQ(reports[0].attempts.size(), 1u);
  EXPECT_EQ(reports[0].attempts[0].status, WitnessStatus::ParameterOutOfRange);
}

TEST(Scan, RejectsNegativeRanges) {
  EXPECT_THROW(scan({-1, 2}, {0, 3}), ParameterOutOfRange);
}

}  // namespace
}  // namespace fourfold
