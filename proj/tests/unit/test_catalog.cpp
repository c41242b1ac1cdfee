#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "fourfold/catalog.hpp"
#include "fourfold/errors.hpp"

namespace fourfold {
namespace {

TEST(Catalog, X2) {
  const ManifoldSpec x = Catalog::builtin().get("X", {2});
  EXPECT_EQ(x.euler(), 56);
  EXPECT_EQ(x.signature(), -32);
  EXPECT_EQ(x.b_plus, 11);
  EXPECT_EQ(x.b_minus, 43);
  EXPECT_TRUE(x.spin);
  ASSERT_EQ(x.pieces.size(), 1u);
  EXPECT_EQ(x.pieces[0].c1_squared, 16);
  EXPECT_EQ(x.pieces[0].c1_divisibility, 2);
  EXPECT_EQ(x.form, UnimodularForm::even(-4, 11));
}

TEST(Catalog, Z5) {
  const ManifoldSpec z = Catalog::builtin().get("Z", {5});
  EXPECT_EQ(z.b_plus, 9);
  EXPECT_EQ(z.b_minus, 20);
  EXPECT_EQ(z.pieces.at(0).c1_squared, 29);
  EXPECT_FALSE(z.spin);
  EXPECT_EQ(z.euler(), 31);
  EXPECT_EQ(z.signature(), -11);
}

TEST(Catalog, BranchedCoverP6) {
  const ManifoldSpec bc = Catalog::builtin().get("BC", {6});
  EXPECT_EQ(bc.b_plus, 21);
  EXPECT_EQ(bc.b_minus, 91);
  EXPECT_EQ(bc.pieces.at(0).c1_squared, 18);
  EXPECT_EQ(bc.einstein_known, "AubinYau");
  // Double-cover Chern numbers: chi = 4p^2 - 6p + 6, tau = 2 - 2p^2.
  EXPECT_EQ(bc.euler(), 4 * 36 - 36 + 6);
  EXPECT_EQ(bc.signature(), 2 - 72);
  EXPECT_EQ(2 * bc.euler() + 3 * bc.signature(), 18);
}

TEST(Catalog, EinsteinAnnotations) {
  EXPECT_EQ(Catalog::builtin().get("K3", {}).einstein_known, "Yau");
  EXPECT_FALSE(Catalog::builtin().get("X", {3}).einstein_known.has_value());
}

TEST(Catalog, YCarriesMultipleFibreClass) {
  const ManifoldSpec y = Catalog::builtin().get("Y", {3});
  ASSERT_EQ(y.pieces.size(), 1u);
  EXPECT_EQ(y.pieces[0].c1_divisibility, 6);
  EXPECT_EQ(y.pieces[0].c1().divisibility(), 6);
  EXPECT_TRUE(Catalog::builtin().get("Y", {0}).pieces.at(0).c1().is_zero());
}

TEST(Catalog, NonSymplecticEntriesCarryNoPiece) {
  for (const char* name : {"S2xS2", "CP2", "CP2bar"}) EXPECT_TRUE(Catalog::builtin().get(name, {}).pieces.empty());
  EXPECT_EQ(Catalog::builtin().get("CP2bar", {}).blowups, 1);
}

TEST(Catalog, EveryBuiltinEntryValidates) {
  const Catalog c = Catalog::builtin();
  for (const char* name : {"K3", "S2xS2", "CP2", "CP2bar", "R22"}) EXPECT_TRUE(validate_record(c.record(name, {})).empty());
  for (std::int64_t k = 2; k <= 40; ++k) EXPECT_TRUE(validate_record(c.record("X", {k})).empty()) << k;
  for (std::int64_t l = 0; l <= 40; ++l) EXPECT_TRUE(validate_record(c.record("Y", {l})).empty()) << l;
  for (std::int64_t i = 2; i <= 40; ++i) EXPECT_TRUE(validate_record(c.record("Z", {i})).empty()) << i;
  for (std::int64_t p = 6; p <= 102; p += 4) EXPECT_TRUE(validate_record(c.record("BC", {p})).empty()) << p;
}

TEST(Catalog, RangeErrors) {
  const Catalog c = Catalog::builtin();
  EXPECT_THROW(c.get("X", {1}), ParameterOutOfRange);
  EXPECT_THROW(c.get("Y", {-1}), ParameterOutOfRange);
  EXPECT_THROW(c.get("Z", {1}), ParameterOutOfRange);
  EXPECT_THROW(c.get("BC", {8}), ParameterOutOfRange);
  EXPECT_THROW(c.get("BC", {2}), ParameterOutOfRange);
  EXPECT_THROW(c.get("X", {}), ParameterOutOfRange);
  EXPECT_THROW(c.get("K3", {1}), ParameterOutOfRange);
  EXPECT_THROW(c.get("X", {kMaxParameter + 1}), ParameterOutOfRange);
  EXPECT_THROW(c.get("W", {}), UnknownCatalogEntry);
  EXPECT_TRUE(c.knows("R22"));
  EXPECT_FALSE(c.knows("W"));
}

TEST(CatalogFile, RecordRoundTrip) {
  const CatalogRecord x = builtin_record("X", {4});
  const auto parsed = parse_catalog_text(x.to_line());
  ASSERT_EQ(parsed.size(), 1u);
  EXPECT_EQ(parsed[0], x);
  const CatalogRecord k3 = builtin_record("K3", {});
  EXPECT_EQ(parse_catalog_text(k3.to_line()).at(0), k3);
}

TEST(CatalogFile, CommentsAndBlankLines) {
  const auto records = parse_catalog_text(
      "# user catalog\n"
      "\n"
      "name=W b_plus=7 b_minus=18 spin=false c1_squared=21 provenance=\"test entry\"  # trailing\n");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].name, "W");
  EXPECT_EQ(records[0].c1_squared, 21);
  EXPECT_EQ(records[0].provenance, "test entry");
}

TEST(CatalogFile, MalformedLinesRaiseCatalogError) {
  EXPECT_THROW(parse_catalog_text("name=W b_plus=x b_minus=1 spin=false"), CatalogError);
  EXPECT_THROW(parse_catalog_text("name=W b_minus=1 spin=false"), CatalogError);
  EXPECT_THROW(parse_catalog_text("name=W b_plus=1 b_minus=1 spin=maybe"), CatalogError);
  EXPECT_THROW(parse_catalog_text("name=W b_plus=1 b_minus=1 spin=false colour=red"), CatalogError);
  EXPECT_THROW(parse_catalog_text("name=W b_plus=1 b_plus=2 b_minus=1 spin=false"), CatalogError);
  EXPECT_THROW(parse_catalog_text("name=W provenance=\"open b_plus=1"), CatalogError);
  EXPECT_THROW(parse_catalog_text("just words"), CatalogError);
}

TEST(CatalogOverrides, ReplaceBuiltinsAndAddEntries) {
  std::vector<std::string> issues;
  const Catalog c = Catalog::with_overrides(
      "name=W b_plus=7 b_minus=18 spin=false c1_squared=21 c1_divisibility=1\n"
      "name=Z params=3 b_plus=5 b_minus=16 spin=false c1_squared=13 c1_divisibility=1 provenance=\"same\"\n",
      issues);
  EXPECT_TRUE(issues.empty());
  EXPECT_TRUE(c.knows("W"));
  EXPECT_EQ(c.get("W", {}).pieces.at(0).c1_squared, 21);
  EXPECT_EQ(c.record("Z", {3}).provenance, "same");
  EXPECT_EQ(c.record("Z", {4}).provenance, builtin_record("Z", {4}).provenance);
  EXPECT_THROW(c.get("W", {1}), ParameterOutOfRange);
}

TEST(CatalogOverrides, InconsistentEntriesAreReported) {
  std::vector<std::string> issues;
  Catalog::with_overrides("name=X params=2 b_plus=12 b_minus=43 spin=true c1_squared=16 c1_divisibility=2\n", issues);
  EXPECT_FALSE(issues.empty());

  issues.clear();
  Catalog::with_overrides("name=BC params=6 b_plus=21 b_minus=90 spin=false c1_squared=21\n", issues);
  EXPECT_FALSE(issues.empty());

  issues.clear();
  Catalog::with_overrides("name=CP2bar b_plus=1 b_minus=0 spin=false\n", issues);
  EXPECT_FALSE(issues.empty());

  issues.clear();
  Catalog::with_overrides("name=Q b_plus=8 b_minus=0 spin=true\n", issues);
  EXPECT_FALSE(issues.empty());
}

TEST(CatalogOverrides, FirstChernClassParityMatchesSpin) {
  std::vector<std::string> issues;
  Catalog::with_overrides("name=K3 b_plus=3 b_minus=19 spin=true c1_squared=0 c1_divisibility=1\n", issues);
  EXPECT_FALSE(issues.empty());
  issues.clear();
  Catalog::with_overrides("name=X params=2 b_plus=11 b_minus=43 spin=true c1_squared=16 c1_divisibility=4\n", issues);
  EXPECT_FALSE(issues.empty());  // generator square 1 is odd
  issues.clear();
  Catalog::with_overrides("name=Z params=3 b_plus=5 b_minus=16 spin=false c1_squared=13 c1_divisibility=2\n", issues);
  EXPECT_FALSE(issues.empty());
  issues.clear();
  Catalog::with_overrides("name=X params=2 b_plus=11 b_minus=43 spin=true c1_squared=16 c1_divisibility=2\n", issues);
  EXPECT_TRUE(issues.empty());
}

TEST(CatalogOverrides, LoadsFromFileAndEnvironment) {
  const std::string path = ::testing::TempDir() + "fourfold_catalog_test.txt";
  {
    std::ofstream out(path);
    out << "name=W b_plus=7 b_minus=18 spin=false c1_squared=21\n";
  }
  std::vector<std::string> issues;
  EXPECT_TRUE(Catalog::from_file(path, issues).knows("W"));
  EXPECT_THROW(Catalog::from_file(path + ".missing", issues), CatalogError);

  ::setenv("FOURFOLD_CATALOG", path.c_str(), 1);
  EXPECT_TRUE(Catalog::from_environment(issues).knows("W"));
  ::unsetenv("FOURFOLD_CATALOG");
  EXPECT_FALSE(Catalog::from_environment(issues).knows("W"));
  EXPECT_TRUE(issues.empty());
}

}  // namespace
}  // namespace fourfold
