#include <gtest/gtest.h>

#include <memory>
#include <set>

#include "fourfold/catalog.hpp"
#include "fourfold/errors.hpp"
#include "fourfold/monopole.hpp"

namespace fourfold {
namespace {

SymplecticPiece piece(std::string_view name, std::vector<std::int64_t> params) {
  return Catalog::builtin().get(name, params).pieces.at(0);
}

TEST(BauerMonopoleSet, SpinFamilyCollapsesToFourClasses) {
  for (std::int64_t ell : {1, 2, 5}) {
    const MonopoleSet s = bauer_monopole_set({piece("X", {2}), piece("Y", {0}), piece("Y", {ell})}, 0);
    EXPECT_EQ(s.source(), MonopoleSource::BauerTriple);
    EXPECT_EQ(s.size(), 4u);
    const auto classes = s.classes();
    ASSERT_EQ(classes.size(), 4u);
    for (const auto& c : classes) EXPECT_EQ(c.square(), 16);
    const std::string f = "f(Y_" + std::to_string(ell) + ")";
    const std::string two_l = std::to_string(2 * ell) + "*" + f;
    // c1(X_2) = 2 f(X_2): X_2 is spin, so its c1 is even.
    const std::set<std::string> expected{"2*f(X_2) + " + two_l, "2*f(X_2) - " + two_l, "-2*f(X_2) + " + two_l,
                                         "-2*f(X_2) - " + two_l};
    const auto strings = s.to_strings();
    EXPECT_EQ(std::set<std::string>(strings.begin(), strings.end()), expected);
  }
}

TEST(BauerMonopoleSet, TwoUntwistedK3sGiveTheZeroClass) {
  const MonopoleSet s = bauer_monopole_set({piece("Y", {0}), piece("Y", {0})}, 0);
  EXPECT_EQ(s.size(), 1u);
  const auto classes = s.classes();
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_TRUE(classes[0].is_zero());
  EXPECT_EQ(bandwidth(s).lower_bound, 0);
  EXPECT_FALSE(bandwidth(s).witness.has_value());
}

TEST(BauerMonopoleSet, SixteenDistinctClassesWithBlowUps) {
  const MonopoleSet s = bauer_monopole_set({piece("Z", {4}), piece("Y", {2})}, 2);
  EXPECT_EQ(s.source(), MonopoleSource::BauerDouble);
  const auto classes = s.classes();
  ASSERT_EQ(classes.size(), 16u);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) EXPECT_NE(classes[i].coefficients(), classes[j].coefficients());
  const CohClass probe = CohClass::parse(s.basis(), "-c1(Z_4) + 4*f(Y_2) - E1 + E2");
  EXPECT_TRUE(s.contains(probe));
  EXPECT_FALSE(s.contains(CohClass::parse(s.basis(), "c1(Z_4) + 2*f(Y_2) - E1 + E2")));
  EXPECT_FALSE(s.contains(CohClass::parse(s.basis(), "c1(Z_4) + 4*f(Y_2) - E1")));
  EXPECT_EQ(probe.square(), 21 - 2);
}

TEST(BauerMonopoleSet, EvidenceRecordsAdmissibility) {
  const MonopoleSet s = bauer_monopole_set({piece("Z", {4}), piece("Y", {2})}, 3);
  EXPECT_EQ(s.evidence().piece_names, (std::vector<std::string>{"Z_4", "Y_2"}));
  EXPECT_EQ(s.evidence().piece_b_plus, (std::vector<std::int64_t>{7, 3}));
  EXPECT_EQ(s.evidence().blowups, 3);
}

TEST(BauerMonopoleSet, Errors) {
  EXPECT_THROW(bauer_monopole_set({piece("Z", {5}), piece("Y", {1})}, 0), InadmissiblePiece);
  EXPECT_THROW(bauer_monopole_set({piece("Y", {1})}, 0), ParameterOutOfRange);
  EXPECT_THROW(bauer_monopole_set({piece("Y", {1}), piece("Y", {1})}, -1), ParameterOutOfRange);
  const SymplecticPiece y = piece("Y", {1});
  EXPECT_THROW(bauer_monopole_set({y, y, y, y}, 0), TooManyPieces);
  SymplecticPiece broken = y;
  broken.c1_squared = 8;
  EXPECT_THROW(bauer_monopole_set({broken, y}, 0), InadmissiblePiece);
}

TEST(BauerMonopoleSet, MaterializationLimit) {
  const MonopoleSet s = bauer_monopole_set({piece("Z", {4}), piece("Y", {2})}, 30);
  EXPECT_EQ(s.size(), std::size_t{1} << 32);
  EXPECT_THROW(s.classes(), std::length_error);
  EXPECT_EQ(bandwidth(s).lower_bound, 4);
}

TEST(Bandwidth, SpinFamilyIsTwoEll) {
  for (std::int64_t ell = 1; ell <= 6; ++ell) {
    const MonopoleSet s = bauer_monopole_set({piece("X", {3}), piece("Y", {0}), piece("Y", {ell})}, 0);
    const Bandwidth structured = bandwidth(s);
    const Bandwidth pairwise = bandwidth(s.classes());
    EXPECT_EQ(structured.lower_bound, 2 * ell);
    EXPECT_EQ(pairwise.lower_bound, 2 * ell);
    ASSERT_TRUE(structured.witness.has_value());
    const CohClass diff = structured.witness->first - structured.witness->second;
    EXPECT_EQ(diff.divisibility(), 4 * ell);
    EXPECT_TRUE(s.contains(structured.witness->first));
    EXPECT_TRUE(s.contains(structured.witness->second));
  }
}

TEST(Bandwidth, ZeroSet) {
  auto b = std::make_shared<GeneratorBasis>();
  EXPECT_EQ(bandwidth(std::vector<CohClass>{CohClass(b)}).lower_bound, 0);
  EXPECT_EQ(bandwidth(std::vector<CohClass>{}).lower_bound, 0);
}

TEST(Bandwidth, ClassAndItsNegative) {
  auto b = std::make_shared<GeneratorBasis>();
  b->add({"c1(X_2)", 16, 1, 0, true});
  b->add({"f(Y_1)", 0, 1, 1, false});
  const CohClass a = CohClass::parse(b, "c1(X_2) + 2*f(Y_1)");
  const Bandwidth bw = bandwidth(std::vector<CohClass>{a, -a});
  EXPECT_EQ(bw.lower_bound, 1);
  EXPECT_EQ((a - (-a)).divisibility(), 2);
}

TEST(BfIndex, Examples) {
  EXPECT_EQ(bf_index(16, -64), 10);
  EXPECT_EQ(bf_index(0, -16), 2);
  EXPECT_EQ(bf_index(29, -11), 5);  // Todd genus of Z_5
  EXPECT_THROW(bf_index(1, 0), CongruenceViolation);
  EXPECT_THROW(bf_index(16, -60), CongruenceViolation);
}

TEST(FamilyCertificate, SpinFamilyIsUnbounded) {
  const auto family = [](std::int64_t ell) {
    return FamilyInstance{"M_2," + std::to_string(ell), {piece("X", {2}), piece("Y", {0}), piece("Y", {ell})}, 0};
  };
  const FamilyCertificate cert = family_certificate(family, {1, 2, 3});
  ASSERT_EQ(cert.rows.size(), 3u);
  EXPECT_EQ(cert.rows[0].bandwidth.lower_bound, 2);
  EXPECT_EQ(cert.rows[1].bandwidth.lower_bound, 4);
  EXPECT_EQ(cert.rows[2].bandwidth.lower_bound, 6);
  EXPECT_TRUE(cert.unbounded_certified);
  for (const auto& r : cert.rows) EXPECT_TRUE(r.bandwidth.witness.has_value());
}

TEST(FamilyCertificate, BlownUpZFamily) {
  const auto family = [](std::int64_t ell) {
    return FamilyInstance{"Z_4 # Y_l # 14 CP2bar", {piece("Z", {4}), piece("Y", {ell})}, 14};
  };
  const FamilyCertificate cert = family_certificate(family, {1, 2});
  EXPECT_EQ(cert.rows[0].bandwidth.lower_bound, 2);
  EXPECT_EQ(cert.rows[1].bandwidth.lower_bound, 4);
  EXPECT_TRUE(cert.unbounded_certified);
}

TEST(FamilyCertificate, ConstantFamilyIsNotCertified) {
  const auto family = [](std::int64_t) {
    return FamilyInstance{"Y_0 # Y_0", {piece("Y", {0}), piece("Y", {0})}, 0};
  };
  const FamilyCertificate cert = family_certificate(family, {1, 2, 3});
  for (const auto& r : cert.rows) EXPECT_EQ(r.bandwidth.lower_bound, 0);
  EXPECT_FALSE(cert.unbounded_certified);
}

TEST(FamilyCertificate, SingleValueIsNotEnough) {
  const auto family = [](std::int64_t ell) {
    return FamilyInstance{"", {piece("X", {2}), piece("Y", {ell})}, 0};
  };
  EXPECT_FALSE(family_certificate(family, {3}).unbounded_certified);
  EXPECT_FALSE(family_certificate(family, {3, 3}).unbounded_certified);
  EXPECT_TRUE(family_certificate(family, {5, 1, 3}).unbounded_certified);
}

TEST(FamilyCertificate, PropagatesInadmissiblePiece) {
  const auto family = [](std::int64_t ell) {
    return FamilyInstance{"", {piece("Z", {5}), piece("Y", {ell})}, 0};
  };
  EXPECT_THROW(family_certificate(family, {1, 2}), InadmissiblePiece);
}

}  // namespace
}  // namespace fourfold
